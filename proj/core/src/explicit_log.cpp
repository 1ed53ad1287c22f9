#include "hyperlog/explicit_log.hpp"

#include <cmath>

#include "hyperlog/errors.hpp"
#include "hyperlog/hyper_eval.hpp"

namespace hyperlog {

namespace {

CBall real_log_principal(const Ball& q, mpfr_prec_t prec) {
  if (q.is_positive()) return CBall(q.log(), Ball(prec));
  if (q.is_negative()) return CBall((-q).log(), Ball::pi(prec));
  throw branch_cut_error("explicit log: real q straddles zero");
}

CBall moebius(const CBall& num_e, const Ball& sq3x) {
  // (1 - sqrt(3x) e) / (1 + sqrt(3x) e)
  CBall scaled = num_e.mul_real(sq3x);
  CBall one = CBall::from_real(Ball::from_long(1, sq3x.precision()));
  CBall den = one + scaled;
  if (den.norm2().contains_zero())
    throw domain_error("explicit log: 1 + sqrt(3x) e_j touches zero");
  return (one - scaled) / den;
}

Ball moebius_real(const Ball& e, const Ball& sq3x) {
  Ball scaled = sq3x * e;
  Ball den = Ball::from_long(1, sq3x.precision()) + scaled;
  if (den.contains_zero())
    throw domain_error("explicit log: 1 + sqrt(3x) e_1 touches zero");
  return (Ball::from_long(1, sq3x.precision()) - scaled) / den;
}

// phase w^k as an exact-ish complex ball, w = e^{2 pi i/3}
CBall omega_pow(int k, const Ball& half_sqrt3, mpfr_prec_t prec) {
  k = ((k % 3) + 3) % 3;
  Ball half = Ball::from_rational(Rational(1, 2), prec);
  switch (k) {
    case 0:
      return CBall::from_real(Ball::from_long(1, prec));
    case 1:
      return CBall(-half, half_sqrt3);
    default:
      return CBall(-half, -half_sqrt3);
  }
}

struct RhsPieces {
  Ball pref;       // (5 sqrt3/36) x^{-1/2}
  Ball coef1;      // p+ + p-
  CBall coef2;     // e^{i pi/3} p+ + e^{-i pi/3} p-
};

RhsPieces rhs_pieces(const CubicRootData& d, mpfr_prec_t prec) {
  Ball sqrt3 = Ball::from_long(3, prec).sqrt();
  RhsPieces r{Ball(prec), Ball(prec), CBall(prec)};
  r.pref = sqrt3.mul_q(Rational(5, 36)) * d.x.pow_q(Rational(-1, 2));
  r.coef1 = d.p_plus + d.p_minus;
  // e^{+-i pi/3} = 1/2 +- i sqrt3/2
  Ball half_sum = r.coef1.mul_q(Rational(1, 2));
  Ball half_diff = (d.p_plus - d.p_minus) * sqrt3.mul_q(Rational(1, 2));
  r.coef2 = CBall(half_sum, half_diff);
  return r;
}

CBall bracket_value(const CubicRootData& d, mpfr_prec_t prec, LogMode mode,
                    const CBall& q2, const CBall& q3) {
  CBall l12(prec), l23(prec);
  if (mode == LogMode::DifferenceOfLogs) {
    CBall lq1 = real_log_principal(d.q1, prec);
    CBall lq2 = q2.log_principal();
    CBall lq3 = q3.log_principal();
    l12 = lq1 - lq2;
    l23 = lq2 - lq3;
  } else {
    l12 = (CBall::from_real(d.q1) / q2).log_principal();
    l23 = (q2 / q3).log_principal();
  }
  RhsPieces pieces = rhs_pieces(d, prec);
  CBall bracket = l12.mul_real(pieces.coef1) + pieces.coef2 * l23;
  return bracket.mul_real(pieces.pref);
}

CubicRootData build_roots_phased(const Ball& x, mpfr_prec_t prec, int k2,
                                 int k3) {
  if (!x.is_positive() ||
      !(Ball::from_long(1, prec) - x).is_positive())
    throw domain_error("build_roots: x must lie strictly inside (0,1)");

  const mpfr_prec_t wp = prec + 32;
  CubicRootData d;
  d.x = x.round_to(wp);
  Ball one = Ball::from_long(1, wp);
  Ball quarter_sqrt = (one - d.x).sqrt().mul_q(Rational(1, 4));
  Ball base = d.x.mul_q(Rational(1, 8)).add_q(Rational(-1, 4));
  d.u = ((base + quarter_sqrt) / d.x).rootn(3);
  d.v = ((base - quarter_sqrt) / d.x).rootn(3);

  Ball half = Ball::from_rational(Rational(1, 2), wp);
  d.e1 = half + d.u + d.v;

  Ball half_sqrt3 = Ball::from_long(3, wp).sqrt().mul_q(Rational(1, 2));
  CBall u_c = CBall::from_real(d.u);
  CBall v_c = CBall::from_real(d.v);
  CBall half_c = CBall::from_real(half);
  d.e2 = half_c + omega_pow(-k2, half_sqrt3, wp) * u_c +
         omega_pow(k2, half_sqrt3, wp) * v_c;
  d.e3 = half_c + omega_pow(-k3, half_sqrt3, wp) * u_c +
         omega_pow(k3, half_sqrt3, wp) * v_c;

  Ball sqx = d.x.sqrt();
  Ball sq1mx = (one - d.x).sqrt();
  d.p_plus = ((one + sq1mx) / sqx).pow_q(Rational(2, 3));
  d.p_minus = ((one - sq1mx) / sqx).pow_q(Rational(2, 3));

  Ball sq3x = (d.x.mul_q(Rational(3))).sqrt();
  d.q1 = moebius_real(d.e1, sq3x);
  d.q2 = moebius(d.e2, sq3x);
  d.q3 = moebius(d.e3, sq3x);
  return d;
}

}  // namespace

CubicRootData build_roots(const Ball& x, mpfr_prec_t prec) {
  // e2 carries e^{-2 pi i/3} on the u-term, e3 the mirror
  return build_roots_phased(x, prec, 1, 2);
}

CubicRootData build_roots(const Rational& x, mpfr_prec_t prec) {
  return build_roots(Ball::from_rational(x, prec + 32), prec);
}

CBall explicit_rhs(const Ball& x, mpfr_prec_t prec, LogMode mode) {
  const mpfr_prec_t wp = prec + 32;
  CubicRootData d = build_roots(x, wp);
  CBall rhs = bracket_value(d, wp, mode, d.q2, d.q3);
  return CBall(rhs.re.round_to(prec), rhs.im.round_to(prec));
}

CBall explicit_residual(const Ball& x, mpfr_prec_t prec, LogMode mode) {
  const mpfr_prec_t wp = prec + 32;
  Ball lhs = pfq({Rational(1), Rational(1), Rational(1, 2)},
                 {Rational(7, 6), Rational(11, 6)}, x, wp);
  CBall rhs = explicit_rhs(x, wp, mode);
  CBall res = CBall::from_real(lhs) - rhs;
  return CBall(res.re.round_to(prec), res.im.round_to(prec));
}

CBall explicit_residual(const Rational& x, mpfr_prec_t prec, LogMode mode) {
  return explicit_residual(Ball::from_rational(x, prec + 32), prec, mode);
}

std::vector<BranchDiagnosis> diagnose_explicit_branches(const Rational& x,
                                                        mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 32;
  Ball xb = Ball::from_rational(x, wp);
  Ball lhs = pfq({Rational(1), Rational(1), Rational(1, 2)},
                 {Rational(7, 6), Rational(11, 6)}, xb, wp);
  std::vector<BranchDiagnosis> out;
  for (int k2 = 0; k2 < 3; ++k2) {
    for (int k3 = 0; k3 < 3; ++k3) {
      if (k2 == k3) continue;
      CubicRootData d = build_roots_phased(xb, wp, k2, k3);
      for (LogMode mode :
           {LogMode::DifferenceOfLogs, LogMode::PrincipalOfRatio}) {
        BranchDiagnosis diag{k2, k3, mode, false, 0.0};
        try {
          CBall rhs = bracket_value(d, wp, mode, d.q2, d.q3);
          CBall res = CBall::from_real(lhs) - rhs;
          diag.residual_contains_zero = res.contains_zero();
          diag.residual_magnitude =
              std::hypot(res.re.mid_double(), res.im.mid_double());
        } catch (const error&) {
          diag.residual_contains_zero = false;
          diag.residual_magnitude = std::nan("");
        }
        out.push_back(diag);
      }
    }
  }
  return out;
}

}  // namespace hyperlog
