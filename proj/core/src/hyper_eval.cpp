#include "hyperlog/hyper_eval.hpp"

#include <algorithm>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

// Exact rational upper bound of an mpfr value (|v| rounded up).
Rational mpfr_abs_upper_q(mpfr_srcptr v) {
  if (mpfr_zero_p(v)) return Rational(0);
  Integer mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v);
  mpz_abs(mant.get_mpz_t(), mant.get_mpz_t());
  Rational q(mant);
  if (e >= 0) {
    Integer two_e;
    mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= Rational(two_e);
  } else {
    Integer two_e;
    mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= Rational(two_e);
  }
  return q;
}

Rational ball_abs_upper_q(const Ball& b) {
  mpfr_t t;
  mpfr_init2(t, Ball::kRadPrec);
  b.abs_upper(t);
  Rational q = mpfr_abs_upper_q(t);
  mpfr_clear(t);
  return q;
}

Integer ceil_int(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return c;
}

void check_lower_params(const std::vector<Rational>& lower) {
  for (const Rational& b : lower)
    if (is_integer(b) && b <= 0)
      throw domain_error("pfq: lower parameter in Z<=0");
}

// Smallest m such that every alpha+m and beta+m is >= 1.
unsigned long positivity_floor(const std::vector<Rational>& upper,
                               const std::vector<Rational>& lower) {
  Rational worst = 0;
  for (const Rational& a : upper) worst = std::min(worst, a);
  for (const Rational& b : lower) worst = std::min(worst, b);
  Integer m = ceil_int(1 - worst);
  return m < 0 ? 0ul : m.get_ui();
}

// Upper bound, valid for every m >= M, of |t_{m+1}/t_m| / |x| where the
// factors are paired (alpha_i+m)/(beta_i+m); each such factor is monotone
// in m, so it is bounded by max(value at M, limit 1).  Unpaired lower
// factors 1/(beta+m) only shrink.  Assumes M >= positivity_floor.
Rational ratio_envelope(const std::vector<Rational>& upper,
                        const std::vector<Rational>& lower_with_factorial,
                        unsigned long M) {
  Rational rho = 1;
  size_t i = 0;
  for (; i < upper.size(); ++i) {
    Rational f = (upper[i] + Rational(static_cast<long>(M))) /
                 (lower_with_factorial[i] + Rational(static_cast<long>(M)));
    rho *= std::max(f, Rational(1));
  }
  for (; i < lower_with_factorial.size(); ++i)
    rho /= lower_with_factorial[i] + Rational(static_cast<long>(M));
  return rho;
}

}  // namespace

void SeriesSpec::validate() const {
  check_lower_params(lower);
  if (order < 1) throw domain_error("SeriesSpec: order must be >= 1");
}

Ball pfq(const std::vector<Rational>& upper,
         const std::vector<Rational>& lower, const Ball& x,
         mpfr_prec_t prec) {
  check_lower_params(lower);

  std::vector<Rational> den = lower;
  den.push_back(Rational(1));  // the n! in the term
  const bool entire = upper.size() < den.size();
  if (upper.size() > den.size())
    throw domain_error("pfq: divergent (more upper than lower+1 parameters)");

  Rational xmag = ball_abs_upper_q(x);
  if (!entire && xmag >= 1)
    throw domain_error("pfq: argument ball leaves the open unit disk");

  // target ratio bound strictly below 1
  Rational rho_star = entire ? Rational(1, 2) : (1 + xmag) / 2;
  unsigned long M = positivity_floor(upper, den);
  while (xmag * ratio_envelope(upper, den, M) > rho_star) {
    M = M * 2 + 8;
    if (M > (1ul << 26)) throw convergence_error("pfq: no usable ratio bound");
  }
  const Rational tail_factor = rho_star / (1 - rho_star);

  const mpfr_prec_t wp = prec + 64;
  Ball sum = Ball::from_long(0, wp);
  Ball term = Ball::from_long(1, wp);
  Ball xw = x.round_to(wp);
  Rational target(Integer(1),
                  Integer(1) << static_cast<unsigned>(prec + 8));

  unsigned long n = 0;
  const unsigned long cap = 1ul << 24;
  while (true) {
    sum += term;
    // t_{n+1} = t_n * x * prod(alpha+n)/[prod(beta+n)(1+n)]
    Rational step = 1;
    for (const Rational& a : upper) step *= a + Rational(static_cast<long>(n));
    for (const Rational& b : den) step /= b + Rational(static_cast<long>(n));
    term = (term * xw).mul_q(step);
    ++n;
    if (n >= M) {
      Rational tail = ball_abs_upper_q(term) * (1 + tail_factor);
      if (tail < target) {
        sum = sum.inflate(tail);
        break;
      }
    }
    if (n > cap) throw convergence_error("pfq: term cap exceeded");
  }
  return sum.round_to(prec);
}

Ball pfq(const std::vector<Rational>& upper,
         const std::vector<Rational>& lower, const Rational& x,
         mpfr_prec_t prec) {
  return pfq(upper, lower, Ball::from_rational(x, prec + 64), prec);
}

Ball pfq_at_1(const Rational& q, const Rational& a, const Rational& b,
              mpfr_prec_t prec, unsigned long max_terms) {
  const Rational sigma = a + b - q - 2;
  if (sigma <= 0)
    throw domain_error("pfq_at_1: not convergent (a+b <= q+2)");

  // From n >= M on:  t_{n+1}/t_n = (n+1)(q+n)/((a+n)(b+n)) <= (n-tau)/(n+1)
  // with tau = sigma/2, which gives |t_n| <= |t_M| (M/n)^{1+tau} and the
  // integral comparison  sum_{n>M2} |t_n| <= |t_M2| M2/tau  for M2 >= M.
  const Rational tau = sigma / 2;
  // h(n) = (n-tau)(a+n)(b+n) - (n+1)^2 (q+n) >= 0 <=> the ratio bound; the
  // cubic terms cancel, so h is a quadratic with positive leading coeff tau.
  const Rational h2 = tau;  // = (a+b-tau) - (q+2)
  const Rational h1 =
      (a * b + (a + b) * (-tau)) - (2 * q + 1);  // n-coefficients
  const Rational h0 = -tau * a * b - q;
  {
    // expansion check, exact: the difference of the two forms is a cubic,
    // so agreement at four points pins it down
    auto h_direct = [&](long n) -> Rational {
      Rational nn(n);
      return (nn - tau) * (a + nn) * (b + nn) - (nn + 1) * (nn + 1) * (q + nn);
    };
    auto h_coeffs = [&](long n) -> Rational {
      Rational nn(n);
      return h2 * nn * nn + h1 * nn + h0;
    };
    for (long probe : {3L, 7L, 11L, 13L})
      if (h_direct(probe) != h_coeffs(probe))
        throw internal_error("pfq_at_1: tail quadratic expansion mismatch");
  }
  // Cauchy bound on the quadratic roots, plus factor-positivity floor.
  Rational root_bound = 1 + std::max(abs(h1 / h2), abs(h0 / h2));
  const std::vector<Rational> ups = {q};
  const std::vector<Rational> lows = {a, b};
  unsigned long M = positivity_floor(ups, lows);
  M = std::max(M, ceil_int(root_bound).get_ui() + 1);
  M = std::max(M, ceil_int(tau).get_ui() + 1);

  const mpfr_prec_t wp = prec + 64;
  Ball sum = Ball::from_long(0, wp);
  Ball term = Ball::from_long(1, wp);
  Rational target(Integer(1),
                  Integer(1) << static_cast<unsigned>(prec + 8));

  unsigned long n = 0;
  Rational tail;
  while (true) {
    sum += term;
    Rational nn(static_cast<long>(n));
    Rational step = (nn + 1) * (q + nn) / ((a + nn) * (b + nn));
    term = term.mul_q(step);
    ++n;
    if (n >= M) {
      // sum holds t_0..t_{n-1}; the tail is |t_n| plus the integral
      // comparison bound |t_n| n/tau for everything past it
      tail = ball_abs_upper_q(term) *
             (1 + Rational(static_cast<long>(n)) / tau);
      if (tail < target || n >= max_terms) break;
    }
  }
  return sum.inflate(tail).round_to(prec);
}

Ball rational_power(const Ball& base, const Rational& exponent,
                    BranchPolicy policy) {
  if (policy == BranchPolicy::Principal) {
    if (!base.is_positive()) {
      if (base.is_negative() || base.contains_zero())
        throw branch_cut_error(
            "rational_power: nonpositive base under the principal branch");
      throw branch_cut_error(
          "rational_power: base ball straddles the branch cut");
    }
    return base.pow_q(exponent);
  }

  // RealOdd: real root for odd denominators, either sign of base
  const Integer& den = exponent.get_den();
  if (mpz_even_p(den.get_mpz_t()))
    throw domain_error("rational_power: even root index under RealOdd");
  if (exponent < 0 && base.contains_zero())
    throw domain_error(
        "rational_power: base must exclude zero for negative exponents");
  if (base.is_positive()) return base.pow_q(exponent);

  Ball root = base.rootn(den.get_ui());
  Rational p(exponent.get_num());
  if (!p.get_num().fits_slong_p())
    throw domain_error("rational_power: exponent numerator too large");
  long pn = p.get_num().get_si();
  Ball b = pn < 0 ? root.inv() : root;
  unsigned long m = static_cast<unsigned long>(pn < 0 ? -pn : pn);
  Ball acc = Ball::from_long(1, base.precision());
  while (m) {
    if (m & 1) acc = acc * b;
    b = b.square();
    m >>= 1;
  }
  return acc;
}

std::pair<Ball, Ball> f1f2(const Rational& mu, const Rational& beta1,
                           const Rational& beta2, const Rational& lambda,
                           mpfr_prec_t prec) {
  if (lambda >= 0)
    throw domain_error("f1f2: lambda must be negative");
  if (is_integer(mu) || is_integer(mu - beta1) || is_integer(mu - beta2) ||
      is_integer(mu - beta1 - beta2))
    throw precondition_error(
        "f1f2: mu, mu-beta_i, mu-beta1-beta2 must be non-integral");

  const Rational arg = 1 / (1 - lambda);  // in (0,1)
  const std::vector<Rational> lower = {2 - beta1, 2 - beta2};
  const mpfr_prec_t wp = prec + 32;

  Ball prefactor =
      rational_power(Ball::from_rational(1 - lambda, wp), mu - 1);
  Ball f1 = pfq({Rational(1), Rational(1), 1 - mu}, lower, arg, wp);
  Ball f2 = pfq({Rational(1), Rational(1), 2 - mu}, lower, arg, wp);
  return {(prefactor * f1).round_to(prec), (prefactor * f2).round_to(prec)};
}

Ball pfq_derivative(const std::vector<Rational>& upper,
                    const std::vector<Rational>& lower, const Rational& x,
                    mpfr_prec_t prec) {
  check_lower_params(lower);
  std::vector<Rational> up1, lo1;
  Rational factor = 1;
  for (const Rational& a : upper) {
    factor *= a;
    up1.push_back(a + 1);
  }
  for (const Rational& b : lower) {
    factor /= b;
    lo1.push_back(b + 1);
  }
  return pfq(up1, lo1, x, prec).mul_q(factor);
}

}  // namespace hyperlog
