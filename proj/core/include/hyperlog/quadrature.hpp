#pragma once

#include "hyperlog/ball.hpp"
#include "hyperlog/hodge.hpp"
#include "hyperlog/rational.hpp"

namespace hyperlog {

// Endpoint-singular integrand x^(alpha-1) (1-x)^(beta-1) (1-tx)^(-gamma)
// over (0,1), with alpha, beta > 0 and t in [0,1).
struct BetaKernelIntegrand {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational t;

  void validate() const;
};

// Tanh-sinh (double-exponential) quadrature with level doubling until two
// successive levels agree to the target.  HEURISTIC: the returned radius is
// the observed level difference, not a proven bound.  Throws
// convergence_error when the level cap is reached without agreement.
Ball de_quad(const BetaKernelIntegrand& f, mpfr_prec_t prec);

// I(t)/I(0) - 2F1(alpha_n, beta_n; alpha_n+beta_n; t) where I is the Euler
// integral attached to the Gauss-type data.  The quadrature side is
// heuristic; the series side is rigorous.  The residual should contain 0.
Ball euler_integral_check(const GaussTypeData& g, const Rational& t,
                          mpfr_prec_t prec);

// Residuals of the two contiguous derivative identities
//   (1-t) F'(a,b;a+b;t)   = ab/(a+b) F(a,b;a+b+1;t)
//   t F'(a,b;a+b+1;t)     = (a+b) (F(a,b;a+b;t) - F(a,b;a+b+1;t))
// evaluated with termwise-differentiated series; both balls are rigorous
// and must contain 0.
std::pair<Ball, Ball> gauss_derivative_check(const Rational& beta1,
                                             const Rational& beta2,
                                             const Rational& t,
                                             mpfr_prec_t prec);

}  // namespace hyperlog
