#pragma once

#include <vector>

#include "hyperlog/ball.hpp"
#include "hyperlog/rational.hpp"

namespace hyperlog {

// Root data for the closed form of 3F2(1,1,1/2; 7/6,11/6; x) on (0,1).
// Both cube-root radicands are negative reals there, so u and v are real
// cube roots; e1 is the real root of the cubic 4x t^3 - 3x t - (x-2) = 0
// shifted by 1/2, and e2, e3 are the conjugate pair.
struct CubicRootData {
  Ball x;
  Ball u, v;        // real cube roots; u v = 1/4
  Ball e1;          // 1/2 + u + v
  CBall e2, e3;     // 1/2 + w^-1 u + w v and its mirror, w = e^{2 pi i/3}
  Ball p_plus, p_minus;  // ((1 +- sqrt(1-x))/sqrt(x))^{2/3}; product 1
  Ball q1;          // (1 - sqrt(3x) e1)/(1 + sqrt(3x) e1)
  CBall q2, q3;
};

CubicRootData build_roots(const Ball& x, mpfr_prec_t prec);
CubicRootData build_roots(const Rational& x, mpfr_prec_t prec);

// How the two logarithms in the bracket are read.  The identity holds with
// per-q principal logarithms subtracted (log q_i - log q_j); taking one
// principal logarithm of the ratio q_i/q_j crosses the cut and misses by a
// multiple of 2 pi i.
enum class LogMode { DifferenceOfLogs, PrincipalOfRatio };

// Right-hand side
//   (5 sqrt3/36) x^{-1/2} [ (p+ + p-) log(q1/q2)
//       + (e^{i pi/3} p+ + e^{-i pi/3} p-) log(q2/q3) ],
// whose imaginary part must contain 0 on (0,1).
CBall explicit_rhs(const Ball& x, mpfr_prec_t prec,
                   LogMode mode = LogMode::DifferenceOfLogs);

// 3F2(1,1,1/2; 7/6,11/6; x) minus the right-hand side; must contain 0.
CBall explicit_residual(const Ball& x, mpfr_prec_t prec,
                        LogMode mode = LogMode::DifferenceOfLogs);
CBall explicit_residual(const Rational& x, mpfr_prec_t prec,
                        LogMode mode = LogMode::DifferenceOfLogs);

// Diagnostic sweep over the root-of-unity assignments compatible with
// u v = 1/4 (e2 takes (w^k u, w^-k v), e3 a different such pair) and both
// log readings, reporting which combinations zero the residual.
struct BranchDiagnosis {
  int k2, k3;  // phase indices of e2, e3 (0,1,2 for 1, w, w^2)
  LogMode mode;
  bool residual_contains_zero;
  double residual_magnitude;
};
std::vector<BranchDiagnosis> diagnose_explicit_branches(const Rational& x,
                                                        mpfr_prec_t prec);

}  // namespace hyperlog
