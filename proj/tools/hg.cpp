// hg: exact and arbitrary-precision toolkit for the logarithmic-formula
// criteria of 3F2 hypergeometric functions.
//
// Exit codes: 0 ok, 1 parse failure, 2 precondition failure, 3 io error,
// 4 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlog/contiguity.hpp"
#include "hyperlog/criteria.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/explicit_log.hpp"
#include "hyperlog/gauss_manin.hpp"
#include "hyperlog/hodge.hpp"
#include "hyperlog/hyper_eval.hpp"
#include "hyperlog/quadrature.hpp"
#include "hyperlog/regulator.hpp"
#include "hyperlog/scan.hpp"
#include "hyperlog/version.hpp"

using namespace hyperlog;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerify = 4;

struct CliError {
  int code;
  std::string message;
};

Rational parse_rat_or_throw(const std::string& s, const char* what) {
  auto q = parse_rational(s);
  if (!q)
    throw CliError{kExitParse,
                   std::string("cannot parse rational for ") + what + ": '" +
                       s + "'"};
  return *q;
}

std::vector<Rational> parse_rat_list(const std::string& s, const char* what) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string item = s.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(parse_rat_or_throw(item, what));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

ordered_json matrix_json(const Mat2& m, const char* var) {
  return ordered_json::array(
      {ordered_json::array({m.a.str(var), m.b.str(var)}),
       ordered_json::array({m.c.str(var), m.d.str(var)})});
}

// residual gate shared by the verify subcommands
bool residual_passes(const Ball& r, double tol) {
  if (!r.contains_zero()) return false;
  return tol <= 0 || r.rad_double() < tol;
}

void print_residual_line(const std::string& name, const Ball& r, bool pass) {
  std::cout << (pass ? "ok   " : "FAIL ") << name << "  residual "
            << r.str(10) << "\n";
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& qs, const std::string& as,
                 const std::string& bs, bool json) {
  HGParams p{parse_rat_or_throw(qs, "--q"), parse_rat_or_throw(as, "--a"),
             parse_rat_or_throw(bs, "--b")};
  ClassificationRecord rec = classify(p);
  if (json) {
    std::cout << rec.to_json() << "\n";
  } else {
    std::cout << "q = " << rational_str(p.q) << ", a = " << rational_str(p.a)
              << ", b = " << rational_str(p.b) << "\n";
    auto bad = check_preconditions(p);
    if (!bad.empty()) {
      std::cout << "violated preconditions:";
      for (const auto& v : bad) std::cout << " " << v;
      std::cout << "\nlabel: " << label_str(rec.label) << "\n";
    } else {
      std::cout << "modulus N = " << rec.modulus.get_str() << "\n";
      std::cout << "  s   eq1    eq2\n";
      for (const auto& [s, v1] : rec.eq1_per_class)
        std::cout << "  " << s.get_str() << "   "
                  << (v1 ? "true " : "false") << "  "
                  << (rec.eq2_per_class.at(s) ? "true" : "false") << "\n";
      std::cout << "converges at x=1: "
                << (rec.converges_at_1 ? "yes" : "no") << "\n";
      std::cout << "label: " << label_str(rec.label) << "\n";
    }
  }
  return rec.label == Label::FailsPreconditions ? kExitPrecondition : kExitOk;
}

// ---------------------------------------------------------------- scan

int cmd_scan(unsigned max_den, const std::string& out_path, bool dedup,
             unsigned jobs) {
  ScanConfig cfg;
  cfg.max_denominator = max_den;
  cfg.output_path = out_path;
  cfg.dedup = dedup;
  cfg.parallelism = jobs;
  unsigned long n = 0;
  try {
    n = run_scan_to_path(cfg);
  } catch (const std::ios_base::failure& e) {
    throw CliError{kExitIo, e.what()};
  }
  std::cerr << "wrote " << n << " records\n";
  return kExitOk;
}

// ---------------------------------------------------------------- eval

int cmd_eval(const std::string& top, const std::string& bottom,
             const std::string& xs, long prec, bool json) {
  std::vector<Rational> upper = parse_rat_list(top, "--top");
  std::vector<Rational> lower = parse_rat_list(bottom, "--bottom");
  Rational x = parse_rat_or_throw(xs, "--x");
  Ball v = pfq(upper, lower, x, prec);
  if (json) {
    ordered_json j;
    j["mid"] = v.mid_str(static_cast<size_t>(prec / 3) + 2);
    j["rad"] = v.rad_str();
    j["bits"] = prec;
    j["heuristic"] = false;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "mid  " << v.mid_str(static_cast<size_t>(prec / 3) + 2)
              << "\nrad  " << v.rad_str() << "\nbits " << prec << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- hodge

int cmd_hodge(const std::string& mus, const std::string& b1s,
              const std::string& b2s, bool all_s, bool json) {
  HodgeInput h{parse_rat_or_throw(mus, "--mu"),
               parse_rat_or_throw(b1s, "--beta1"),
               parse_rat_or_throw(b2s, "--beta2")};
  int d = d_chi(h);
  HodgeTriple triple = hodge_triple(d);
  ordered_json per;
  bool tate = false;
  if (all_s) {
    const Rational vals[] = {h.mu, h.beta1, h.beta2};
    Integer N = denominator_lcm(vals);
    tate = true;
    for (const UnitClass& s : unit_classes(N)) {
      int ds = d_chi(HodgeInput{s.times(h.mu), s.times(h.beta1),
                                s.times(h.beta2)});
      per[s.residue.get_str()] = ds;
      tate = tate && ds == 1;
    }
  }
  if (json) {
    ordered_json j;
    j["mu"] = rational_str(h.mu);
    j["beta1"] = rational_str(h.beta1);
    j["beta2"] = rational_str(h.beta2);
    j["d_chi"] = d;
    j["hodge"] = ordered_json::array({triple.h20, triple.h11, triple.h02});
    if (all_s) {
      j["per_class"] = per;
      j["tate"] = tate;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "d_chi = " << d << "\nhodge triple = (" << triple.h20 << ","
              << triple.h11 << "," << triple.h02 << ")\n";
    if (all_s) {
      std::cout << "per class:";
      for (auto& [k, v] : per.items())
        std::cout << " " << k << ":" << v.get<int>();
      std::cout << "\ntate type (1,1): " << (tate ? "yes" : "no") << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- gm

int cmd_gm(const std::string& b1s, const std::string& b2s, int point,
           bool json) {
  Rational b1 = parse_rat_or_throw(b1s, "--beta1");
  Rational b2 = parse_rat_or_throw(b2s, "--beta2");
  Mat2 m = connection_matrix(b1, b2);
  Mat2 g = canonical_frame(b1, b2, point);
  Mat2 transformed = transformed_connection(m, g);
  ResidueMatrix res = residue_at(transformed, Rational(point));
  Eigenvalues ev = eigenvalues(res);

  if (json) {
    ordered_json j;
    j["beta1"] = rational_str(b1);
    j["beta2"] = rational_str(b2);
    j["point"] = point;
    j["connection"] = matrix_json(m, "t");
    j["frame"] = matrix_json(g, "t");
    j["residue"] = ordered_json::array(
        {ordered_json::array({rational_str(res.a), rational_str(res.b)}),
         ordered_json::array({rational_str(res.c), rational_str(res.d)})});
    if (ev.rational_pair)
      j["eigenvalues"] =
          ordered_json::array({rational_str(ev.first), rational_str(ev.second)});
    else
      j["char_poly"] = {{"trace", rational_str(ev.trace)},
                        {"det", rational_str(ev.det)}};
    j["in_unit_interval"] = ev.in_unit_interval;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "connection  " << m.str() << "\n";
    std::cout << "frame       " << g.str() << "\n";
    std::cout << "residue at " << point << ": [[" << rational_str(res.a)
              << ", " << rational_str(res.b) << "], [" << rational_str(res.c)
              << ", " << rational_str(res.d) << "]]\n";
    if (ev.rational_pair)
      std::cout << "eigenvalues " << rational_str(ev.first) << ", "
                << rational_str(ev.second) << "\n";
    else
      std::cout << "char poly: trace " << rational_str(ev.trace) << ", det "
                << rational_str(ev.det) << "\n";
    std::cout << "in [0,1): " << (ev.in_unit_interval ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- detscan

int cmd_detscan(const std::string& mus, const std::string& b1s,
                const std::string& b2s, long rmax, bool json) {
  RecurrenceParams p{parse_rat_or_throw(mus, "--mu"),
                     parse_rat_or_throw(b1s, "--beta1"),
                     parse_rat_or_throw(b2s, "--beta2")};
  std::vector<long> zeros = det_scan(p, rmax);
  bool closed_ok = e_det(p, 0) == e_det0_closed_form(p, p.mu);
  if (json) {
    ordered_json j;
    j["mu"] = rational_str(p.mu);
    j["beta1"] = rational_str(p.beta1);
    j["beta2"] = rational_str(p.beta2);
    j["rmax"] = rmax;
    j["vanishing_r"] = zeros;
    j["closed_form_r0_ok"] = closed_ok;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "scanned r in [0," << rmax << "]: ";
    if (zeros.empty()) {
      std::cout << "no identically vanishing determinant\n";
    } else {
      std::cout << "vanishing at";
      for (long r : zeros) std::cout << " " << r;
      std::cout << "\n";
    }
    std::cout << "closed form at r=0: " << (closed_ok ? "ok" : "MISMATCH")
              << "\n";
  }
  return (zeros.empty() && closed_ok) ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------- verify

int verify_euler(long N, long a, long b, long n, long d, const std::string& ts,
                 long prec, double tol) {
  GaussTypeData g = gauss_type_data(N, a, b, n, d);
  Rational t = parse_rat_or_throw(ts, "--t");
  Ball r = euler_integral_check(g, t, prec);
  bool pass = residual_passes(r, tol);
  print_residual_line("euler-integral", r, pass);
  return pass ? kExitOk : kExitVerify;
}

int verify_gauss_derivative(const std::string& b1s, const std::string& b2s,
                            const std::string& ts, long prec, double tol) {
  auto [r1, r2] =
      gauss_derivative_check(parse_rat_or_throw(b1s, "--beta1"),
                             parse_rat_or_throw(b2s, "--beta2"),
                             parse_rat_or_throw(ts, "--t"), prec);
  bool p1 = residual_passes(r1, tol);
  bool p2 = residual_passes(r2, tol);
  print_residual_line("derivative identity 1", r1, p1);
  print_residual_line("derivative identity 2", r2, p2);
  return (p1 && p2) ? kExitOk : kExitVerify;
}

OpKind parse_kind(const std::string& s) {
  if (s == "lowerb" || s == "lower-b") return OpKind::LowerB;
  if (s == "raisea" || s == "raise-a") return OpKind::RaiseA;
  if (s == "theta1" || s == "raiseb" || s == "raise-b") return OpKind::RaiseB;
  if (s == "theta2" || s == "lowera" || s == "lower-a") return OpKind::LowerA;
  throw CliError{kExitParse, "unknown contiguity kind '" + s + "'"};
}

int verify_contiguity_cmd(const std::string& kind, const std::string& params,
                          const std::string& xs, bool all, long prec,
                          double tol) {
  std::vector<Rational> ps = parse_rat_list(params, "--params");
  if (ps.size() != 5)
    throw CliError{kExitParse, "--params needs exactly five rationals"};
  std::array<Rational, 3> up{ps[0], ps[1], ps[2]};
  std::array<Rational, 2> lo{ps[3], ps[4]};

  bool ok = true;
  if (all) {
    for (OpKind k : {OpKind::LowerB, OpKind::RaiseA, OpKind::RaiseB,
                     OpKind::LowerA}) {
      for (Rational x : {make_rational(1, 4), make_rational(1, 3),
                         make_rational(1, 2)}) {
        Ball r = verify_contiguity(k, up, lo, x, prec);
        bool pass = residual_passes(r, tol);
        print_residual_line(std::string(op_kind_str(k)) + " at x=" +
                                rational_str(x),
                            r, pass);
        ok = ok && pass;
      }
    }
  } else {
    OpKind k = parse_kind(kind);
    Rational x = parse_rat_or_throw(xs, "--x");
    Ball r = verify_contiguity(k, up, lo, x, prec);
    ok = residual_passes(r, tol);
    print_residual_line(op_kind_str(k), r, ok);
  }
  return ok ? kExitOk : kExitVerify;
}

int verify_explicit_log(const std::string& xs, long prec, double tol,
                        bool json, bool diagnose) {
  Rational x = parse_rat_or_throw(xs, "--x");
  CBall r = explicit_residual(x, prec);
  bool pass = r.contains_zero() &&
              (tol <= 0 || (r.re.rad_double() < tol &&
                            r.im.rad_double() < tol));
  if (json) {
    ordered_json j;
    j["x"] = rational_str(x);
    j["bits"] = prec;
    j["mid_re"] = r.re.mid_str(24);
    j["mid_im"] = r.im.mid_str(24);
    j["rad_re"] = r.re.rad_str();
    j["rad_im"] = r.im.rad_str();
    j["heuristic"] = false;
    j["pass"] = pass;
    std::cout << j.dump() << "\n";
  } else {
    print_residual_line("explicit-log re", r.re, pass);
    print_residual_line("explicit-log im", r.im, pass);
  }
  if (!pass && diagnose) {
    std::cout << "branch diagnosis:\n";
    for (const auto& row : diagnose_explicit_branches(x, prec)) {
      std::cout << "  k2=" << row.k2 << " k3=" << row.k3 << " mode="
                << (row.mode == LogMode::DifferenceOfLogs ? "difference"
                                                          : "ratio")
                << (row.residual_contains_zero ? "  zeroes the residual"
                                               : "  fails")
                << " (|res| ~ " << row.residual_magnitude << ")\n";
    }
  }
  return pass ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperlog: logarithmic-formula criteria and verifications "
               "for 3F2 hypergeometric functions"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  long prec = 128;
  double tol = 0.0;
  bool json = false;
  app.add_option("--prec", prec, "working precision in bits")
      ->capture_default_str();
  app.add_option("--tol", tol, "radius tolerance for verification passes");
  app.add_flag("--json", json, "emit JSON instead of tables");

  std::string qs, as, bs;
  auto* c_classify = app.add_subcommand("classify", "classify one (q,a,b)");
  c_classify->add_option("--q", qs)->required();
  c_classify->add_option("--a", as)->required();
  c_classify->add_option("--b", bs)->required();

  unsigned max_den = 6, jobs = 1;
  std::string out_path = "-";
  bool no_dedup = false;
  auto* c_scan = app.add_subcommand("scan", "classify all small triples");
  c_scan->add_option("--max-den", max_den, "denominator bound (>=2)")
      ->capture_default_str();
  c_scan->add_option("--out", out_path, "output JSONL path or -")
      ->capture_default_str();
  c_scan->add_flag("--no-dedup", no_dedup, "keep a,b order variants");
  c_scan->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  std::string top, bottom, xs;
  auto* c_eval = app.add_subcommand("eval", "evaluate pFq at a point");
  c_eval->add_option("--top", top, "comma-separated upper parameters")
      ->required();
  c_eval->add_option("--bottom", bottom, "comma-separated lower parameters")
      ->required();
  c_eval->add_option("--x", xs)->required();

  std::string mus, b1s, b2s;
  bool all_s = false;
  auto* c_hodge = app.add_subcommand("hodge", "Hodge numbers from d_chi");
  c_hodge->add_option("--mu", mus)->required();
  c_hodge->add_option("--beta1", b1s)->required();
  c_hodge->add_option("--beta2", b2s)->required();
  c_hodge->add_flag("--all-s", all_s, "evaluate every unit class");

  int point = 0;
  auto* c_gm = app.add_subcommand(
      "gm", "connection matrix, canonical frame and residues");
  c_gm->add_option("--beta1", b1s)->required();
  c_gm->add_option("--beta2", b2s)->required();
  c_gm->add_option("--point", point, "0 or 1")->required();

  long rmax = 200;
  auto* c_detscan =
      app.add_subcommand("detscan", "exact determinant vanishing scan");
  c_detscan->add_option("--mu", mus)->required();
  c_detscan->add_option("--beta1", b1s)->required();
  c_detscan->add_option("--beta2", b2s)->required();
  c_detscan->add_option("--rmax", rmax)->capture_default_str();

  auto* c_verify =
      app.add_subcommand("verify", "numeric verification suites");
  c_verify->require_subcommand(1);

  long vN = 5, va = 1, vb = 2, vn = 1, vd = 1;
  std::string ts = "1/3";
  auto* v_euler = c_verify->add_subcommand(
      "euler-integral", "quadrature ratio against the 2F1 series");
  v_euler->add_option("--N", vN)->capture_default_str();
  v_euler->add_option("--a", va)->capture_default_str();
  v_euler->add_option("--b", vb)->capture_default_str();
  v_euler->add_option("--n", vn)->capture_default_str();
  v_euler->add_option("--d", vd)->capture_default_str();
  v_euler->add_option("--t", ts)->capture_default_str();

  auto* v_deriv = c_verify->add_subcommand(
      "gauss-derivative", "the two contiguous derivative identities");
  v_deriv->add_option("--beta1", b1s)->required();
  v_deriv->add_option("--beta2", b2s)->required();
  v_deriv->add_option("--t", ts)->capture_default_str();

  std::string kind = "theta1", params = "1,1,1/2,7/6,11/6";
  bool all_kinds = false;
  auto* v_contig =
      c_verify->add_subcommand("contiguity", "the four shift identities");
  v_contig->add_option("--kind", kind,
                       "lowerb | raisea | theta1 | theta2")
      ->capture_default_str();
  v_contig->add_option("--params", params, "a1,a2,a3,b1,b2")
      ->capture_default_str();
  v_contig->add_option("--x", xs, "argument in (0,1)");
  v_contig->add_flag("--all", all_kinds, "all kinds at x=1/4,1/3,1/2");

  bool diagnose = true;
  auto* v_explicit = c_verify->add_subcommand(
      "explicit-log", "closed form for 3F2(1,1,1/2;7/6,11/6;x)");
  v_explicit->add_option("--x", xs, "argument in (0,1)")->required();
  v_explicit->add_flag("!--no-diagnose", diagnose,
                       "skip branch diagnosis on failure");

  // global flags (--json/--prec/--tol) may follow the subcommand name
  for (CLI::App* sub : app.get_subcommands(
           [](const CLI::App*) { return true; })) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands(
             [](const CLI::App*) { return true; }))
      nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*c_classify) return cmd_classify(qs, as, bs, json);
    if (*c_scan) return cmd_scan(max_den, out_path, !no_dedup, jobs);
    if (*c_eval) return cmd_eval(top, bottom, xs, prec, json);
    if (*c_hodge) return cmd_hodge(mus, b1s, b2s, all_s, json);
    if (*c_gm) return cmd_gm(b1s, b2s, point, json);
    if (*c_detscan) return cmd_detscan(mus, b1s, b2s, rmax, json);
    if (*c_verify) {
      if (*v_euler) return verify_euler(vN, va, vb, vn, vd, ts, prec, tol);
      if (*v_deriv)
        return verify_gauss_derivative(b1s, b2s, ts, prec, tol);
      if (*v_contig)
        return verify_contiguity_cmd(kind, params, xs.empty() ? "1/3" : xs,
                                     all_kinds, prec, tol);
      if (*v_explicit)
        return verify_explicit_log(xs, prec, tol, json, diagnose);
    }
  } catch (const CliError& e) {
    std::cerr << "hg: " << e.message << "\n";
    return e.code;
  } catch (const precondition_error& e) {
    std::cerr << "hg: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const parse_error& e) {
    std::cerr << "hg: " << e.what() << "\n";
    return kExitParse;
  } catch (const error& e) {
    std::cerr << "hg: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "hg: internal error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
