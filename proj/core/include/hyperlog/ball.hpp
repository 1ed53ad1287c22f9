#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "hyperlog/rational.hpp"

namespace hyperlog {

// Arbitrary-precision real value with a rigorous error radius.  Every
// operation returns a ball containing the exact image of its operand balls;
// the only exceptions are explicitly marked heuristic (see quadrature.hpp).
//
// The midpoint carries the working precision; the radius is kept at a fixed
// small precision and always rounded upward.
class Ball {
 public:
  static constexpr mpfr_prec_t kRadPrec = 64;

  explicit Ball(mpfr_prec_t prec = 64);
  Ball(const Ball& o);
  Ball(Ball&& o) noexcept;
  Ball& operator=(const Ball& o);
  Ball& operator=(Ball&& o) noexcept;
  ~Ball();

  static Ball from_rational(const Rational& q, mpfr_prec_t prec);
  static Ball from_long(long v, mpfr_prec_t prec);
  static Ball pi(mpfr_prec_t prec);
  // the interval [lo, hi] given as exact endpoint values
  static Ball from_endpoints_raw(const mpfr_t lo, const mpfr_t hi,
                                 mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }
  const __mpfr_struct* mid() const { return mid_; }
  const __mpfr_struct* rad() const { return rad_; }

  bool is_finite() const;
  bool contains_zero() const;
  bool contains(const Rational& q) const;
  // containment of another ball: every point of o lies in *this
  bool contains_ball(const Ball& o) const;
  // the two balls share at least one point (midpoint gap within the radii)
  bool overlaps(const Ball& o) const;
  bool is_positive() const;  // entire ball > 0
  bool is_negative() const;
  // rigorous bounds at radius precision
  void abs_upper(mpfr_t out) const;  // sup |x|
  void abs_lower(mpfr_t out) const;  // inf |x| (0 if the ball straddles 0)
  void lower(mpfr_t out) const;      // inf x, rounded down
  void upper(mpfr_t out) const;      // sup x, rounded up

  Ball round_to(mpfr_prec_t prec) const;

  friend Ball operator-(const Ball& a);
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);

  Ball& operator+=(const Ball& o) { return *this = *this + o; }
  Ball& operator-=(const Ball& o) { return *this = *this - o; }
  Ball& operator*=(const Ball& o) { return *this = *this * o; }

  // exact-rational variants (no ball needed for the scalar)
  Ball add_q(const Rational& q) const;
  Ball mul_q(const Rational& q) const;
  Ball div_q(const Rational& q) const;

  Ball inv() const;    // ball must exclude 0
  Ball sqrt() const;   // ball must be >= 0
  Ball log() const;    // ball must be > 0
  Ball exp() const;
  Ball atan() const;
  // odd-index real root, defined for balls of either sign
  Ball rootn(unsigned long n) const;
  Ball pow_q(const Rational& e) const;  // positive base, via exp(e log x)
  Ball square() const;

  // radius grown by |q| (used to absorb explicit error bounds)
  Ball inflate(const Rational& q) const;

  double mid_double() const;
  double rad_double() const;
  std::string str(size_t digits = 20) const;
  std::string mid_str(size_t digits = 20) const;
  std::string rad_str() const;

 private:
  void bump_rad_ulp();  // add one ulp of the midpoint to the radius
  mpfr_prec_t prec_;
  mpfr_t mid_;
  mpfr_t rad_;
};

// atan2(y, x) with the principal convention, arguments in (-pi, pi].
// Throws branch_cut_error when the balls straddle the negative real axis
// (or the origin) so that no single branch value covers them.
Ball atan2_ball(const Ball& y, const Ball& x);

// Complex ball: componentwise rigorous rectangle enclosure.
struct CBall {
  Ball re, im;

  explicit CBall(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  CBall(Ball r, Ball i) : re(std::move(r)), im(std::move(i)) {}
  static CBall from_real(Ball r);

  mpfr_prec_t precision() const { return re.precision(); }
  bool contains_zero() const {
    return re.contains_zero() && im.contains_zero();
  }

  friend CBall operator-(const CBall& z);
  friend CBall operator+(const CBall& a, const CBall& b);
  friend CBall operator-(const CBall& a, const CBall& b);
  friend CBall operator*(const CBall& a, const CBall& b);
  friend CBall operator/(const CBall& a, const CBall& b);
  CBall& operator+=(const CBall& o) { return *this = *this + o; }
  CBall& operator-=(const CBall& o) { return *this = *this - o; }

  CBall conj() const;
  Ball norm2() const;  // re^2 + im^2
  // principal logarithm; throws branch_cut_error near the cut
  CBall log_principal() const;
  CBall mul_real(const Ball& r) const;

  std::string str(size_t digits = 20) const;
};

}  // namespace hyperlog
