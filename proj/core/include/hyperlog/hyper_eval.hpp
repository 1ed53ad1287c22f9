#pragma once

#include <utility>
#include <vector>

#include "hyperlog/ball.hpp"
#include "hyperlog/rational.hpp"

namespace hyperlog {

// Parameters and truncation order of a generalized hypergeometric series.
struct SeriesSpec {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  unsigned order;  // truncation order M >= 1

  void validate() const;  // throws on lower parameters in Z<=0 or order 0
};

// Rigorous enclosure of pFq(upper; lower; x): partial sum plus a geometric
// tail bound once the term ratio is provably below 1.  Needs |x| strictly
// inside the unit disk when #upper = #lower + 1; entire when
// #upper <= #lower; divergent otherwise.
Ball pfq(const std::vector<Rational>& upper,
         const std::vector<Rational>& lower, const Ball& x,
         mpfr_prec_t prec);
Ball pfq(const std::vector<Rational>& upper,
         const std::vector<Rational>& lower, const Rational& x,
         mpfr_prec_t prec);

// Enclosure of 3F2(1,1,q; a,b; 1), which converges iff a+b > q+2.  Direct
// summation; the tail is bounded through an explicit integral comparison,
// so the radius honestly reflects how slowly the series converges.
// max_terms caps the summation length.
Ball pfq_at_1(const Rational& q, const Rational& a, const Rational& b,
              mpfr_prec_t prec, unsigned long max_terms = 400000);

enum class BranchPolicy {
  Principal,  // positive real base required of a real ball
  RealOdd,    // odd-denominator exponent, real root of either sign
};

// base^exponent with an explicit branch policy.
Ball rational_power(const Ball& base, const Rational& exponent,
                    BranchPolicy policy = BranchPolicy::Principal);

// The pair (F1, F2) built from 3F2 values at (1-lambda)^{-1} with prefactor
// (1-lambda)^{mu-1}: upper parameters (1,1,1-mu) resp. (1,1,2-mu), lower
// (2-beta1, 2-beta2).  lambda must be negative so the argument lies in (0,1).
std::pair<Ball, Ball> f1f2(const Rational& mu, const Rational& beta1,
                           const Rational& beta2, const Rational& lambda,
                           mpfr_prec_t prec);

// d/dx pFq as a series evaluation (termwise derivative reindexed as a pFq
// with shifted parameters times a rational factor).
Ball pfq_derivative(const std::vector<Rational>& upper,
                    const std::vector<Rational>& lower, const Rational& x,
                    mpfr_prec_t prec);

}  // namespace hyperlog
