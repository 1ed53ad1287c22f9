#include "hyperlog/rational.hpp"

#include <cctype>

#include "hyperlog/errors.hpp"

namespace hyperlog {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

std::optional<Rational> parse_rational(std::string_view s) {
  auto all_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };

  std::string_view num = s, den;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!all_digits(den)) return std::nullopt;
  }
  if (!num.empty() && num.front() == '-') num.remove_prefix(1);
  if (!all_digits(num)) return std::nullopt;

  Rational q;
  if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    return std::nullopt;
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  return q.get_str();  // canonical form already prints as "p/q" or "p"
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor_int(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

Rational frac(const Rational& q) {
  Rational r = q - Rational(floor_int(q));
  return r;
}

Rational pochhammer(const Rational& alpha, unsigned long n) {
  Rational acc = 1;
  Rational term = alpha;
  for (unsigned long k = 0; k < n; ++k) {
    acc *= term;
    term += 1;
  }
  return acc;
}

Integer denominator_lcm(std::span<const Rational> values) {
  Integer l = 1;
  for (const Rational& q : values)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  return l;
}

std::vector<UnitClass> unit_classes(const Integer& N) {
  if (N < 1) throw domain_error("unit_classes: modulus must be positive");
  if (N == 1) return {UnitClass{1, 1}};  // identity class of the trivial group
  std::vector<UnitClass> out;
  Integer g;
  for (Integer s = 1; s < N; ++s) {
    mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), N.get_mpz_t());
    if (g == 1) out.push_back(UnitClass{N, s});
  }
  return out;
}

}  // namespace hyperlog
