#include "hyperlog/regulator.hpp"

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

// The chain keeps C_i(s) = c_i / (1-lambda)^i and D_i(s) = d_i / (1-lambda)^i
// with polynomial numerators (degree <= i); the rational constants
// P(s) = (a+s-1)(b+s-1) are absorbed into the coefficients.  One step down
// the argument chain:
//   c_{i+1}@s = s((a+b+2s-3)(1-lambda) - s) c_i@(s+1) / P(s)
//               + (1-lambda) d_i@(s+1)
//   d_{i+1}@s = -lambda s(1-s) c_i@(s+1) / P(s)

Rational p_of(const RecurrenceParams& p, const Rational& s) {
  return (p.a() + s - 1) * (p.b() + s - 1);
}

struct Level {
  std::vector<Poly> c, d;  // index j: value at argument s0 + j
};

Poly one_minus_lambda() {
  return Poly::from_coeffs({Rational(1), Rational(-1)});
}

// numerator of A(s) over P(s)(1-lambda): s((a+b+2s-3)(1-lambda) - s)
Poly a_num(const RecurrenceParams& p, const Rational& s) {
  Rational k = p.a() + p.b() + 2 * s - 3;
  return Poly::from_coeffs({s * (k - s), -s * k});
}

// numerator of B(s) over P(s)(1-lambda): -lambda s(1-s)
Poly b_num(const Rational& s) {
  return Poly::from_coeffs({Rational(0), -s * (1 - s)});
}

// c_i@(s0), d_i@(s0) for i = 0..imax, where s0 = mu + shift.
std::pair<std::vector<Poly>, std::vector<Poly>> chain_at(
    const RecurrenceParams& p, long imax, long shift) {
  const Rational s0 = p.mu + Rational(shift);
  Level level;
  level.c.assign(static_cast<size_t>(imax) + 1, Poly(Rational(1)));
  level.d.assign(static_cast<size_t>(imax) + 1, Poly());

  std::vector<Poly> c_out, d_out;
  c_out.reserve(static_cast<size_t>(imax) + 1);
  d_out.reserve(static_cast<size_t>(imax) + 1);
  c_out.push_back(level.c[0]);
  d_out.push_back(level.d[0]);

  const Poly oml = one_minus_lambda();
  for (long i = 0; i < imax; ++i) {
    const size_t width = static_cast<size_t>(imax - i);
    Level next;
    next.c.reserve(width);
    next.d.reserve(width);
    for (size_t j = 0; j < width; ++j) {
      Rational s = s0 + Rational(static_cast<long>(j));
      Rational ps = p_of(p, s);
      if (ps == 0)
        throw pole_error("regulator chain: (a+s-1)(b+s-1) vanished");
      Rational inv_ps = 1 / ps;
      Poly c_new = a_num(p, s) * level.c[j + 1];
      c_new *= inv_ps;
      c_new += oml * level.d[j + 1];
      Poly d_new = b_num(s) * level.c[j + 1];
      d_new *= inv_ps;
      next.c.push_back(std::move(c_new));
      next.d.push_back(std::move(d_new));
    }
    level = std::move(next);
    c_out.push_back(level.c[0]);
    d_out.push_back(level.d[0]);
  }
  return {std::move(c_out), std::move(d_out)};
}

// numerator / (1-lambda)^k with the shared (1-lambda) factors divided out
RationalFunction over_oml_power(Poly num, long k) {
  const Poly oml = one_minus_lambda();
  while (k > 0 && num.eval(Rational(1)) == 0) {
    num = Poly::exact_div(num, oml);
    --k;
  }
  if (num.is_zero()) return RationalFunction();
  return RationalFunction::from_reduced(std::move(num),
                                        oml.pow(static_cast<unsigned>(k)));
}

}  // namespace

void RecurrenceParams::validate() const {
  if (is_integer(beta1) || is_integer(beta2))
    throw precondition_error("RecurrenceParams: beta_i must be non-integral");
  if (is_integer(mu) || is_integer(mu - beta1) || is_integer(mu - beta2) ||
      is_integer(mu - beta1 - beta2))
    throw precondition_error(
        "RecurrenceParams: mu, mu-beta_i, mu-beta1-beta2 must be "
        "non-integral");
}

std::pair<RationalFunction, RationalFunction> ab_funcs(
    const RecurrenceParams& p, const Rational& s) {
  p.validate();
  Rational ps = p_of(p, s);
  if (ps == 0)
    throw pole_error("ab_funcs: (a+s-1)(b+s-1) = 0 at s = " +
                     rational_str(s));
  Poly den = one_minus_lambda() * Rational(ps);
  return {RationalFunction(a_num(p, s), den),
          RationalFunction(b_num(s), den)};
}

CDPair cd_sequence(const RecurrenceParams& p, long r, long shift) {
  p.validate();
  if (r < -1) throw domain_error("cd_sequence: r must be >= -1");
  CDPair out;
  out.index = r;
  out.argument = p.mu + Rational(shift);
  if (r == -1) {
    out.C = RationalFunction();
    out.D = RationalFunction(Rational(1));
    return out;
  }
  auto [c, d] = chain_at(p, r, shift);
  out.C = over_oml_power(c[static_cast<size_t>(r)], r);
  out.D = over_oml_power(d[static_cast<size_t>(r)], r);
  return out;
}

EPair e_pair(const RecurrenceParams& p, long r, long shift) {
  p.validate();
  if (r < -1) throw domain_error("e_pair: r must be >= -1");
  EPair out;
  out.r = r;
  if (r == -1) {
    // from (C_{-1},D_{-1}) = (0,1) and (C_0,D_0) = (1,0)
    out.E1 = RationalFunction(one_minus_lambda());
    out.E2 = RationalFunction(Poly::variable());
    return out;
  }
  auto [c, d] = chain_at(p, r + 1, shift);
  const Poly lambda = Poly::variable();
  Poly e1 = lambda * c[static_cast<size_t>(r)] + c[static_cast<size_t>(r) + 1];
  Poly e2 = lambda * d[static_cast<size_t>(r)] + d[static_cast<size_t>(r) + 1];
  out.E1 = over_oml_power(std::move(e1), r);
  out.E2 = over_oml_power(std::move(e2), r);
  return out;
}

RationalFunction e_det(const RecurrenceParams& p, long r) {
  p.validate();
  if (r < 0) throw domain_error("e_det: r must be >= 0");
  auto [c, d] = chain_at(p, r + 1, 0);
  const Poly lambda = Poly::variable();
  auto e1 = [&](long k) {  // numerator of E1^(k) over (1-lambda)^k, k >= 0
    return lambda * c[static_cast<size_t>(k)] + c[static_cast<size_t>(k) + 1];
  };
  auto e2 = [&](long k) {
    return lambda * d[static_cast<size_t>(k)] + d[static_cast<size_t>(k) + 1];
  };
  if (r == 0) {
    // E^(-1) = (1-lambda, lambda), both polynomial
    Poly det = e1(0) * lambda - e2(0) * one_minus_lambda();
    return over_oml_power(std::move(det), 0);
  }
  Poly det = e1(r) * e2(r - 1) - e2(r) * e1(r - 1);
  return over_oml_power(std::move(det), 2 * r - 1);
}

RationalFunction e_det0_closed_form(const RecurrenceParams& p,
                                    const Rational& s) {
  Rational ps = p_of(p, s);
  if (ps == 0)
    throw pole_error("e_det0_closed_form: (s+a-1)(s+b-1) = 0");
  Rational a = p.a(), b = p.b();
  Poly num = Poly::from_coeffs(
      {Rational(0), s * (a + b - 2), (a - 1) * (b - 1)});
  return RationalFunction(num, Poly(ps));
}

namespace {

// Exact values C_i(mu+j), D_i(mu+j) at a fixed rational lambda0 (not 0 or 1),
// i = 0..imax at j=0.  A nonzero determinant value at one exact point proves
// the rational function nonzero; only zero values need the symbolic route.
std::pair<std::vector<Rational>, std::vector<Rational>> chain_values(
    const RecurrenceParams& p, long imax, const Rational& lambda0) {
  const Rational u = 1 / (1 - lambda0);
  std::vector<Rational> av, bv;  // A(mu+j)(lambda0), B(mu+j)(lambda0)
  av.reserve(static_cast<size_t>(imax));
  bv.reserve(static_cast<size_t>(imax));
  for (long j = 0; j < imax; ++j) {
    Rational s = p.mu + Rational(j);
    Rational ps = p_of(p, s);
    if (ps == 0) throw pole_error("regulator chain: denominator vanished");
    av.push_back(s * (p.a() + p.b() + 2 * s - 3 - s * u) / ps);
    bv.push_back(s * (1 - s) * (1 - u) / ps);
  }

  std::vector<Rational> c(static_cast<size_t>(imax) + 1, Rational(1));
  std::vector<Rational> d(static_cast<size_t>(imax) + 1, Rational(0));
  std::vector<Rational> c_out{c[0]}, d_out{d[0]};
  for (long i = 0; i < imax; ++i) {
    const size_t width = static_cast<size_t>(imax - i);
    for (size_t j = 0; j < width; ++j) {
      Rational cn = av[j] * c[j + 1] + d[j + 1];
      d[j] = bv[j] * c[j + 1];
      c[j] = std::move(cn);
    }
    c_out.push_back(c[0]);
    d_out.push_back(d[0]);
  }
  return {std::move(c_out), std::move(d_out)};
}

// r values whose determinant vanishes at lambda0, among candidates
std::vector<long> vanishing_at(const RecurrenceParams& p, long rmax,
                               const Rational& lambda0,
                               const std::vector<long>& candidates) {
  auto [c, d] = chain_values(p, rmax + 1, lambda0);
  const Rational l = lambda0, m = 1 - lambda0;
  std::vector<Rational> e1, e2;  // index r+1; entry 0 is r = -1
  e1.reserve(static_cast<size_t>(rmax) + 2);
  e2.reserve(static_cast<size_t>(rmax) + 2);
  e1.push_back(m);  // E^(-1) = (1-lambda, lambda)
  e2.push_back(l);
  for (long r = 0; r <= rmax; ++r) {
    e1.push_back(l * c[static_cast<size_t>(r)] +
                 m * c[static_cast<size_t>(r) + 1]);
    e2.push_back(l * d[static_cast<size_t>(r)] +
                 m * d[static_cast<size_t>(r) + 1]);
  }
  std::vector<long> zero;
  for (long r : candidates) {
    size_t k = static_cast<size_t>(r) + 1;
    Rational det = e1[k] * e2[k - 1] - e2[k] * e1[k - 1];
    if (det == 0) zero.push_back(r);
  }
  return zero;
}

}  // namespace

std::vector<long> det_scan(const RecurrenceParams& p, long rmax) {
  p.validate();
  if (rmax < 0) throw domain_error("det_scan: rmax must be >= 0");

  std::vector<long> candidates(static_cast<size_t>(rmax) + 1);
  for (long r = 0; r <= rmax; ++r) candidates[static_cast<size_t>(r)] = r;

  // a nonzero value at an exact point settles nonvanishing; escalate the
  // rare zero hits to a second point and finally to the full numerator
  std::vector<long> suspects = vanishing_at(p, rmax, Rational(-1), candidates);
  if (!suspects.empty())
    suspects = vanishing_at(p, rmax, Rational(-2), suspects);

  std::vector<long> zero_rs;
  for (long r : suspects)
    if (e_det(p, r).is_zero()) zero_rs.push_back(r);
  return zero_rs;
}

}  // namespace hyperlog
