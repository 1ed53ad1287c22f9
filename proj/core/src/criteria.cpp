#include "hyperlog/criteria.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

void require_same_modulus(const HGParams& p, const UnitClass& s) {
  if (s.modulus != p.joint_modulus())
    throw precondition_error("unit class modulus " + s.modulus.get_str() +
                             " does not match parameter modulus " +
                             p.joint_modulus().get_str());
}

}  // namespace

Integer HGParams::joint_modulus() const {
  const Rational vals[] = {q, a, b};
  return denominator_lcm(vals);
}

const char* label_str(Label l) {
  switch (l) {
    case Label::FailsPreconditions:
      return "FailsPreconditions";
    case Label::LogFunctional:
      return "LogFunctional";
    case Label::LogAtOneOnly:
      return "LogAtOneOnly";
    case Label::None:
      return "None";
  }
  return "None";
}

std::optional<Label> label_from_str(std::string_view s) {
  if (s == "FailsPreconditions") return Label::FailsPreconditions;
  if (s == "LogFunctional") return Label::LogFunctional;
  if (s == "LogAtOneOnly") return Label::LogAtOneOnly;
  if (s == "None") return Label::None;
  return std::nullopt;
}

std::vector<std::string> check_preconditions(const HGParams& p) {
  std::vector<std::string> bad;
  auto check = [&bad](const Rational& v, const char* name) {
    if (is_integer(v)) bad.emplace_back(name);
  };
  check(p.q, "q");
  check(p.a, "a");
  check(p.b, "b");
  check(p.q - p.a, "q-a");
  check(p.q - p.b, "q-b");
  check(p.q - p.a - p.b, "q-a-b");
  return bad;
}

bool eq1_holds_at(const HGParams& p, const UnitClass& s) {
  require_same_modulus(p, s);
  Rational sa = frac(s.times(p.a));
  Rational sb = frac(s.times(p.b));
  Rational sq = frac(s.times(p.q));
  Rational sum = sa + sb + 2 * frac(s.times(-p.q)) -
                 frac(s.times(p.a - p.q)) - frac(s.times(p.b - p.q));
  bool by_sum = (sum == 1);

  if (sq == sa || sq == sb)
    throw internal_error(
        "eq1_holds_at: fractional-part tie; preconditions or modulus broken");
  bool by_bracket = (std::min(sa, sb) < sq) && (sq < std::max(sa, sb));

  if (by_sum != by_bracket)
    throw internal_error("eq1_holds_at: sum form and bracket form disagree");
  return by_sum;
}

bool eq2_holds_at(const HGParams& p, const UnitClass& s) {
  require_same_modulus(p, s);
  Rational sum = frac(s.times(p.q)) + frac(s.times(p.a - p.q)) +
                 frac(s.times(p.b - p.q)) + frac(s.times(p.q - p.a - p.b));
  return sum == 2;
}

ClassificationRecord classify(const HGParams& p) {
  ClassificationRecord rec;
  rec.params = p;
  rec.modulus = p.joint_modulus();
  rec.converges_at_1 = (p.a + p.b > p.q + 2);

  if (!check_preconditions(p).empty()) {
    rec.label = Label::FailsPreconditions;
    return rec;
  }

  bool all_eq1 = true, all_eq2 = true;
  for (const UnitClass& s : unit_classes(rec.modulus)) {
    bool e1 = eq1_holds_at(p, s);
    bool e2 = eq2_holds_at(p, s);
    if (e1 && !e2)
      throw internal_error("classify: eq1 holds but eq2 fails at s=" +
                           s.residue.get_str());
    rec.eq1_per_class[s.residue] = e1;
    rec.eq2_per_class[s.residue] = e2;
    all_eq1 = all_eq1 && e1;
    all_eq2 = all_eq2 && e2;
  }

  // The interlacing algebraicity test needs every upper parameter to have a
  // nonzero fractional part; the unit upper indices of 3F2(1,1,q;a,b) never
  // do, so these functions sit outside its scope and the flag stays false.
  rec.bh_algebraic = false;

  if (all_eq1)
    rec.label = Label::LogFunctional;
  else if (all_eq2)
    rec.label = Label::LogAtOneOnly;
  else
    rec.label = Label::None;
  return rec;
}

std::string ClassificationRecord::to_json() const {
  nlohmann::ordered_json j;
  j["q"] = rational_str(params.q);
  j["a"] = rational_str(params.a);
  j["b"] = rational_str(params.b);
  if (!modulus.fits_slong_p())
    throw domain_error("record JSON: modulus exceeds the wire format");
  j["N"] = modulus.get_si();
  nlohmann::ordered_json e1 = nlohmann::ordered_json::object();
  for (const auto& [s, v] : eq1_per_class) e1[s.get_str()] = v;
  nlohmann::ordered_json e2 = nlohmann::ordered_json::object();
  for (const auto& [s, v] : eq2_per_class) e2[s.get_str()] = v;
  j["eq1"] = std::move(e1);
  j["eq2"] = std::move(e2);
  j["bh"] = bh_algebraic;
  j["converges_at_1"] = converges_at_1;
  j["label"] = label_str(label);
  return j.dump();
}

ClassificationRecord ClassificationRecord::from_json(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("record JSON: ") + e.what());
  }
  auto rat = [&j](const char* key) {
    auto v = parse_rational(j.at(key).get<std::string>());
    if (!v) throw parse_error(std::string("record JSON: bad rational at ") + key);
    return *v;
  };
  ClassificationRecord rec;
  rec.params = HGParams{rat("q"), rat("a"), rat("b")};
  rec.modulus = Integer(j.at("N").get<long>());
  for (const auto& [k, v] : j.at("eq1").items())
    rec.eq1_per_class[Integer(k)] = v.get<bool>();
  for (const auto& [k, v] : j.at("eq2").items())
    rec.eq2_per_class[Integer(k)] = v.get<bool>();
  rec.bh_algebraic = j.at("bh").get<bool>();
  rec.converges_at_1 = j.at("converges_at_1").get<bool>();
  auto lbl = label_from_str(j.at("label").get<std::string>());
  if (!lbl) throw parse_error("record JSON: unknown label");
  rec.label = *lbl;
  return rec;
}

bool bh_algebraic(const BHInput& input) {
  if (input.upper.empty())
    throw precondition_error("bh_algebraic: empty upper parameter list");
  if (input.lower.size() + 1 != input.upper.size())
    throw precondition_error(
        "bh_algebraic: need exactly p-1 lower parameters");
  for (const Rational& a : input.upper)
    if (frac(a) == 0)
      throw precondition_error("bh_algebraic: {a_i} = 0 for some i");
  for (const Rational& a : input.upper)
    for (const Rational& b : input.lower)
      if (frac(a) == frac(b))
        throw precondition_error("bh_algebraic: {a_i} = {b_j} for some i,j");

  std::vector<Rational> all = input.upper;
  all.insert(all.end(), input.lower.begin(), input.lower.end());
  Integer N = denominator_lcm(all);

  auto strictly_interlace = [](std::vector<Rational> xs,
                               std::vector<Rational> ys) {
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    // merge must alternate strictly, starting from either side
    bool x_first = xs[0] < ys[0];
    const auto& lo = x_first ? xs : ys;
    const auto& hi = x_first ? ys : xs;
    for (size_t i = 0; i < lo.size(); ++i) {
      if (!(lo[i] < hi[i])) return false;
      if (i + 1 < lo.size() && !(hi[i] < lo[i + 1])) return false;
    }
    return true;
  };

  for (const UnitClass& s : unit_classes(N)) {
    std::vector<Rational> xs, ys;
    xs.reserve(input.upper.size());
    for (const Rational& a : input.upper) xs.push_back(frac(s.times(a)));
    ys.push_back(Rational(0));
    for (const Rational& b : input.lower) ys.push_back(frac(s.times(b)));
    if (!strictly_interlace(std::move(xs), std::move(ys))) return false;
  }
  return true;
}

}  // namespace hyperlog
