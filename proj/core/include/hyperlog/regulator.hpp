#pragma once

#include <utility>
#include <vector>

#include "hyperlog/rational.hpp"
#include "hyperlog/rational_function.hpp"

namespace hyperlog {

// Parameters of the lifting recurrences: mu = k/l and the two exponents
// beta_i; the derived lower-type parameters are a = 2-beta1, b = 2-beta2.
struct RecurrenceParams {
  Rational mu;
  Rational beta1, beta2;

  Rational a() const { return 2 - beta1; }
  Rational b() const { return 2 - beta2; }
  // throws precondition_error unless mu, mu-beta_i, mu-beta1-beta2 and
  // beta_i are all non-integral
  void validate() const;
};

// A(s), B(s) as reduced rational functions in lambda, the (1-lambda)^{-1}
// occurrences cleared over the denominator (1-lambda):
//   A(s) = s(a+b+2s-3-s(1-lambda)^{-1}) / ((a+s-1)(b+s-1))
//   B(s) = s(1-s)(1-(1-lambda)^{-1}) / ((a+s-1)(b+s-1))
// Throws pole_error when (a+s-1)(b+s-1) = 0.
std::pair<RationalFunction, RationalFunction> ab_funcs(
    const RecurrenceParams& p, const Rational& s);

// One entry of the coupled recurrence
//   (C_{i+1}(s), D_{i+1}(s))^T = [[A(s),1],[B(s),0]] (C_i(s+1), D_i(s+1))^T
// with seed (C_{-1}, D_{-1}) = (0, 1).
struct CDPair {
  long index;        // i >= -1
  Rational argument; // s
  RationalFunction C, D;
};

// (C_r, D_r) at argument mu + shift, computed down the shifted chain
// mu+shift, mu+shift+1, ..., entirely in exact arithmetic.
CDPair cd_sequence(const RecurrenceParams& p, long r, long shift = 0);

struct EPair {
  long r;  // >= -1
  RationalFunction E1, E2;
};

// E_1^{(r)} = lambda C_r + (1-lambda) C_{r+1},
// E_2^{(r)} = lambda D_r + (1-lambda) D_{r+1}, at argument mu + shift.
EPair e_pair(const RecurrenceParams& p, long r, long shift = 0);

// det [[E1^(r), E2^(r)], [E1^(r-1), E2^(r-1)]] at argument mu, reduced.
RationalFunction e_det(const RecurrenceParams& p, long r);

// The closed form of the determinant at r=0 and argument s:
//   lambda ((a-1)(b-1) lambda + s(a+b-2)) / ((s+a-1)(s+b-1))
RationalFunction e_det0_closed_form(const RecurrenceParams& p,
                                    const Rational& s);

// Exact zero scan: the r in [0, rmax] whose determinant is identically
// zero as a rational function (expected none for valid parameters).
std::vector<long> det_scan(const RecurrenceParams& p, long rmax);

}  // namespace hyperlog
