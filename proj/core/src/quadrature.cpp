#include "hyperlog/quadrature.hpp"

#include <mpfr.h>

#include "hyperlog/errors.hpp"
#include "hyperlog/hyper_eval.hpp"

namespace hyperlog {

namespace {

struct Work {
  mpfr_prec_t wp;
  mpfr_t half_pi, s, ch, x, omx, w, val, tmp, e2s;
  explicit Work(mpfr_prec_t p) : wp(p) {
    mpfr_inits2(p, half_pi, s, ch, x, omx, w, val, tmp, e2s, nullptr);
    mpfr_const_pi(half_pi, MPFR_RNDN);
    mpfr_div_2ui(half_pi, half_pi, 1, MPFR_RNDN);
  }
  ~Work() { mpfr_clears(half_pi, s, ch, x, omx, w, val, tmp, e2s, nullptr); }
};

// Evaluates w(u) f(x(u)) at u, into out.  x(u) = 1/(1+e^{-2s}),
// 1-x = 1/(1+e^{2s}), s = (pi/2) sinh u, dx/du = (pi/2) cosh(u) sech^2(s)/2.
void node_value(Work& wk, const BetaKernelIntegrand& f, mpfr_srcptr u,
                mpfr_ptr out) {
  mpfr_sinh_cosh(wk.s, wk.ch, u, MPFR_RNDN);
  mpfr_mul(wk.s, wk.s, wk.half_pi, MPFR_RNDN);  // s

  // x and 1-x through e^{2s}, stable at both ends
  mpfr_mul_2ui(wk.e2s, wk.s, 1, MPFR_RNDN);
  mpfr_exp(wk.e2s, wk.e2s, MPFR_RNDN);  // e^{2s}
  mpfr_add_ui(wk.tmp, wk.e2s, 1, MPFR_RNDN);
  mpfr_ui_div(wk.omx, 1, wk.tmp, MPFR_RNDN);        // 1-x = 1/(1+e^{2s})
  mpfr_div(wk.x, wk.e2s, wk.tmp, MPFR_RNDN);        // x = e^{2s}/(1+e^{2s})

  // weight: (pi/2) cosh(u) * 4 e^{2s}/(1+e^{2s})^2 / 2 = pi cosh(u) x(1-x)
  mpfr_mul(wk.w, wk.x, wk.omx, MPFR_RNDN);
  mpfr_mul(wk.w, wk.w, wk.ch, MPFR_RNDN);
  mpfr_mul(wk.w, wk.w, wk.half_pi, MPFR_RNDN);
  mpfr_mul_2ui(wk.w, wk.w, 1, MPFR_RNDN);

  // x^(alpha-1)
  mpfr_set_q(wk.tmp, Rational(f.alpha - 1).get_mpq_t(), MPFR_RNDN);
  mpfr_pow(wk.val, wk.x, wk.tmp, MPFR_RNDN);
  // (1-x)^(beta-1)
  mpfr_set_q(wk.tmp, Rational(f.beta - 1).get_mpq_t(), MPFR_RNDN);
  mpfr_pow(wk.tmp, wk.omx, wk.tmp, MPFR_RNDN);
  mpfr_mul(wk.val, wk.val, wk.tmp, MPFR_RNDN);
  // (1-tx)^(-gamma)
  if (f.gamma != 0 && f.t != 0) {
    mpfr_mul_q(wk.tmp, wk.x, f.t.get_mpq_t(), MPFR_RNDN);
    mpfr_ui_sub(wk.tmp, 1, wk.tmp, MPFR_RNDN);
    mpfr_set_q(wk.e2s, Rational(-f.gamma).get_mpq_t(), MPFR_RNDN);
    mpfr_pow(wk.tmp, wk.tmp, wk.e2s, MPFR_RNDN);
    mpfr_mul(wk.val, wk.val, wk.tmp, MPFR_RNDN);
  }
  mpfr_mul(out, wk.val, wk.w, MPFR_RNDN);
}

}  // namespace

void BetaKernelIntegrand::validate() const {
  if (alpha <= 0 || beta <= 0)
    throw domain_error("de_quad: need alpha, beta > 0");
  if (t < 0 || t >= 1)
    throw domain_error("de_quad: need t in [0,1)");
}

Ball de_quad(const BetaKernelIntegrand& f, mpfr_prec_t prec) {
  f.validate();
  const mpfr_prec_t wp = prec + 32;
  Work wk(wp);

  mpfr_t u, term, level_sum, prev, diff, cutoff, scale;
  mpfr_inits2(wp, u, term, level_sum, prev, diff, cutoff, scale, nullptr);
  mpfr_set_nan(prev);

  const int level_cap = 14;
  bool converged = false;
  for (int level = 2; level <= level_cap && !converged; ++level) {
    // h = 2^-level; nodes at u = k h
    mpfr_set_ui(u, 0, MPFR_RNDN);
    node_value(wk, f, u, term);
    mpfr_set(level_sum, term, MPFR_RNDN);

    for (int side = 0; side < 2; ++side) {
      int quiet = 0;
      for (long k = 1;; ++k) {
        mpfr_set_si(u, side == 0 ? k : -k, MPFR_RNDN);
        mpfr_div_2ui(u, u, static_cast<unsigned>(level), MPFR_RNDN);
        node_value(wk, f, u, term);
        mpfr_add(level_sum, level_sum, term, MPFR_RNDN);
        // stop a side once terms stay negligible
        mpfr_abs(cutoff, level_sum, MPFR_RNDN);
        mpfr_add_ui(cutoff, cutoff, 1, MPFR_RNDN);
        mpfr_div_2ui(cutoff, cutoff, static_cast<unsigned>(wp + 8),
                     MPFR_RNDN);
        if (mpfr_cmpabs(term, cutoff) <= 0) {
          if (++quiet >= 3) break;
        } else {
          quiet = 0;
        }
        if (k > (200l << level))
          throw convergence_error("de_quad: node cap exceeded");
      }
    }
    mpfr_div_2ui(level_sum, level_sum, static_cast<unsigned>(level),
                 MPFR_RNDN);

    if (mpfr_number_p(prev)) {
      mpfr_sub(diff, level_sum, prev, MPFR_RNDN);
      mpfr_abs(diff, diff, MPFR_RNDU);
      mpfr_abs(scale, level_sum, MPFR_RNDN);
      mpfr_add_ui(scale, scale, 1, MPFR_RNDN);
      mpfr_div_2ui(scale, scale, static_cast<unsigned>(prec - 4), MPFR_RNDN);
      if (mpfr_cmp(diff, scale) <= 0) converged = true;
    }
    mpfr_set(prev, level_sum, MPFR_RNDN);
  }
  if (!converged)
    throw convergence_error("de_quad: level cap without agreement");

  // midpoint = last level, radius = observed level difference (heuristic)
  Ball out(prec);
  {
    mpfr_t lo, hi;
    mpfr_inits2(wp, lo, hi, nullptr);
    mpfr_sub(lo, level_sum, diff, MPFR_RNDD);
    mpfr_add(hi, level_sum, diff, MPFR_RNDU);
    out = Ball::from_endpoints_raw(lo, hi, prec);
    mpfr_clears(lo, hi, nullptr);
  }
  mpfr_clears(u, term, level_sum, prev, diff, cutoff, scale, nullptr);
  return out;
}

Ball euler_integral_check(const GaussTypeData& g, const Rational& t,
                          mpfr_prec_t prec) {
  if (t < 0 || t >= 1)
    throw domain_error("euler_integral_check: need t in [0,1)");
  BetaKernelIntegrand at_t{g.alpha_n, g.beta_n, g.beta_n, t};
  BetaKernelIntegrand at_0{g.alpha_n, g.beta_n, Rational(0), Rational(0)};
  Ball it = de_quad(at_t, prec + 16);
  Ball i0 = de_quad(at_0, prec + 16);
  Ball series =
      pfq({g.alpha_n, g.beta_n}, {g.alpha_n + g.beta_n}, t, prec + 16);
  return (it / i0 - series).round_to(prec);
}

std::pair<Ball, Ball> gauss_derivative_check(const Rational& beta1,
                                             const Rational& beta2,
                                             const Rational& t,
                                             mpfr_prec_t prec) {
  if (t <= 0 || t >= 1)
    throw domain_error("gauss_derivative_check: need t in (0,1)");
  if (is_integer(beta1) || is_integer(beta2))
    throw precondition_error("gauss_derivative_check: beta_i integral");
  const Rational a = beta1, b = beta2, c = beta1 + beta2;
  if (is_integer(c) && c <= 0)
    throw domain_error("gauss_derivative_check: a+b in Z<=0");
  const mpfr_prec_t wp = prec + 32;

  Ball f_c = pfq({a, b}, {c}, t, wp);
  Ball f_c1 = pfq({a, b}, {c + 1}, t, wp);
  Ball df_c = pfq_derivative({a, b}, {c}, t, wp);
  Ball df_c1 = pfq_derivative({a, b}, {c + 1}, t, wp);

  Ball one_minus_t = Ball::from_rational(1 - t, wp);
  Ball r1 = one_minus_t * df_c - f_c1.mul_q(a * b / c);
  Ball r2 = df_c1.mul_q(t) - (f_c - f_c1).mul_q(c);
  return {r1.round_to(prec), r2.round_to(prec)};
}

}  // namespace hyperlog
