#include "hyperlog/hodge.hpp"

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

Integer gcd(const Integer& x, const Integer& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

void validate_hodge_input(const HodgeInput& h) {
  if (is_integer(h.mu))
    throw precondition_error("HodgeInput: mu is an integer");
  if (is_integer(h.beta1 - h.mu) || is_integer(h.beta2 - h.mu))
    throw precondition_error("HodgeInput: beta_i - mu is an integer");
}

}  // namespace

GaussTypeData gauss_type_data(const Integer& N, const Integer& a,
                              const Integer& b, const Integer& n,
                              const Integer& d) {
  if (N < 1 || a <= 0 || a >= N || b <= 0 || b >= N)
    throw precondition_error("gauss_type_data: need 0 < a,b < N");
  if (gcd(gcd(N, a), b) != 1)
    throw precondition_error("gauss_type_data: gcd(N,a,b) != 1");
  if (gcd(n, N) != 1)
    throw precondition_error("gauss_type_data: gcd(n,N) != 1");
  if (d < 1 || N % d != 0)
    throw precondition_error("gauss_type_data: d must divide N");
  if ((a * d) % N == 0 || (b * d) % N == 0)
    throw precondition_error(
        "gauss_type_data: not Gauss type (ad or bd = 0 mod N)");

  GaussTypeData g;
  g.N = N;
  g.a = a;
  g.b = b;
  g.n = n;
  g.d = d;
  g.d1 = gcd(N, a);
  g.d2 = gcd(N, b);
  g.a_n = floor_int(make_rational(a * n, N));
  g.b_n = floor_int(make_rational(b * n, N));
  g.c_n = n - g.b_n - 1;
  g.alpha_n = frac(make_rational(-a * n, N));
  g.beta_n = frac(make_rational(-b * n, N));
  return g;
}

int d_chi(const HodgeInput& h) {
  auto deltas = d_chi_deltas(h);
  return deltas[0] + deltas[1];
}

std::array<int, 2> d_chi_deltas(const HodgeInput& h) {
  validate_hodge_input(h);
  auto delta = [&h](const Rational& beta) {
    Rational v = frac(beta) + frac(-h.mu) - frac(beta - h.mu);
    if (v != 0 && v != 1)
      throw internal_error("d_chi: delta outside {0,1}");
    return v == 1 ? 1 : 0;
  };
  return {delta(h.beta1), delta(h.beta2)};
}

HodgeTriple hodge_triple(int d) {
  switch (d) {
    case 2:
      return HodgeTriple{1, 1, 0};
    case 1:
      return HodgeTriple{0, 2, 0};
    case 0:
      return HodgeTriple{0, 1, 1};
    default:
      throw domain_error("hodge_triple: d must be 0, 1 or 2");
  }
}

bool tate_check(const HodgeInput& h) {
  validate_hodge_input(h);
  const Rational vals[] = {h.mu, h.beta1, h.beta2};
  Integer N = denominator_lcm(vals);
  for (const UnitClass& s : unit_classes(N)) {
    HodgeInput hs{s.times(h.mu), s.times(h.beta1), s.times(h.beta2)};
    if (d_chi(hs) != 1) return false;
  }
  return true;
}

RiemannScheme RiemannScheme::from_exponents(const Rational& alpha,
                                            const Rational& beta) {
  if (is_integer(alpha) || is_integer(beta))
    throw precondition_error("RiemannScheme: integral exponent");
  RiemannScheme r;
  r.at_zero = {Rational(0), 1 - alpha - beta};
  r.at_one = {Rational(0), Rational(0)};
  r.at_infinity = {alpha, beta};
  return r;
}

Rational RiemannScheme::exponent_sum() const {
  Rational s = 0;
  for (const auto& e : at_zero) s += e;
  for (const auto& e : at_one) s += e;
  for (const auto& e : at_infinity) s += e;
  return s;
}

}  // namespace hyperlog
