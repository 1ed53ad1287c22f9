#include "hyperlog/ball.hpp"

#include <cassert>
#include <cstdio>
#include <vector>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

// Scratch mpfr value with RAII.
struct Tmp {
  mpfr_t v;
  explicit Tmp(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  operator mpfr_ptr() { return v; }
  operator mpfr_srcptr() const { return v; }
};

}  // namespace

Ball::Ball(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& o) : prec_(o.prec_) {
  mpfr_init2(mid_, o.prec_);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);  // same precision: exact
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(mid_, 2);
  mpfr_init2(rad_, 2);
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

Ball& Ball::operator=(const Ball& o) {
  if (this == &o) return *this;
  prec_ = o.prec_;
  mpfr_set_prec(mid_, o.prec_);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
  return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
  if (this == &o) return *this;
  prec_ = o.prec_;
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void Ball::bump_rad_ulp() {
  if (mpfr_zero_p(mid_)) {
    assert(false && "inexact rounding to zero midpoint");
    return;
  }
  Tmp ulp(kRadPrec);
  // 2^(exp - prec + 1) >= one ulp of the midpoint
  mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(mid_) - prec_ + 1, MPFR_RNDU);
  mpfr_add(rad_, rad_, ulp, MPFR_RNDU);
}

Ball Ball::from_rational(const Rational& q, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_q(b.mid_, q.get_mpq_t(), MPFR_RNDN);
  if (t != 0) b.bump_rad_ulp();
  return b;
}

Ball Ball::from_long(long v, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_si(b.mid_, v, MPFR_RNDN);
  if (t != 0) b.bump_rad_ulp();
  return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
  Tmp lo(prec), hi(prec);
  mpfr_const_pi(lo, MPFR_RNDD);
  mpfr_const_pi(hi, MPFR_RNDU);
  return from_endpoints_raw(lo, hi, prec);
}

Ball Ball::from_endpoints_raw(const mpfr_t lo, const mpfr_t hi,
                              mpfr_prec_t prec) {
  Ball b(prec);
  mpfr_add(b.mid_, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(b.mid_, b.mid_, 1, MPFR_RNDN);
  // radius from the midpoint actually stored, so its rounding is covered
  Tmp d1(kRadPrec), d2(kRadPrec);
  mpfr_sub(d1, b.mid_, lo, MPFR_RNDA);
  mpfr_abs(d1, d1, MPFR_RNDU);
  mpfr_sub(d2, hi, b.mid_, MPFR_RNDA);
  mpfr_abs(d2, d2, MPFR_RNDU);
  mpfr_max(b.rad_, d1, d2, MPFR_RNDU);
  return b;
}

bool Ball::is_finite() const {
  return mpfr_number_p(mid_) && mpfr_number_p(rad_) && mpfr_sgn(rad_) >= 0;
}

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool Ball::contains(const Rational& q) const {
  Tmp d(prec_ + 64);
  mpfr_sub_q(d, mid_, q.get_mpq_t(), MPFR_RNDA);  // |d| >= |mid - q|
  return mpfr_cmpabs(d, rad_) <= 0;
}

bool Ball::contains_ball(const Ball& o) const {
  Tmp d(kRadPrec);
  mpfr_sub(d, mid_, o.mid_, MPFR_RNDA);
  mpfr_abs(d, d, MPFR_RNDU);
  mpfr_add(d, d, o.rad_, MPFR_RNDU);
  return mpfr_cmp(d, rad_) <= 0;
}

bool Ball::overlaps(const Ball& o) const {
  Tmp d(kRadPrec), sum(kRadPrec);
  mpfr_sub(d, mid_, o.mid_, MPFR_RNDZ);  // |d| <= |mid - o.mid|
  mpfr_abs(d, d, MPFR_RNDD);
  mpfr_add(sum, rad_, o.rad_, MPFR_RNDU);
  return mpfr_cmp(d, sum) <= 0;
}

bool Ball::is_positive() const {
  Tmp lo(kRadPrec);
  mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
  return mpfr_sgn(lo.v) > 0;
}

bool Ball::is_negative() const {
  Tmp hi(kRadPrec);
  mpfr_add(hi, mid_, rad_, MPFR_RNDU);
  return mpfr_sgn(hi.v) < 0;
}

void Ball::abs_upper(mpfr_t out) const {
  mpfr_abs(out, mid_, MPFR_RNDU);
  mpfr_add(out, out, rad_, MPFR_RNDU);
}

void Ball::abs_lower(mpfr_t out) const {
  mpfr_abs(out, mid_, MPFR_RNDD);
  mpfr_sub(out, out, rad_, MPFR_RNDD);
  if (mpfr_sgn(out) < 0) mpfr_set_zero(out, 1);
}

void Ball::lower(mpfr_t out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }

void Ball::upper(mpfr_t out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

Ball Ball::round_to(mpfr_prec_t prec) const {
  Ball b(prec);
  int t = mpfr_set(b.mid_, mid_, MPFR_RNDN);
  mpfr_set(b.rad_, rad_, MPFR_RNDU);
  if (t != 0) b.bump_rad_ulp();
  return b;
}

Ball operator-(const Ball& a) {
  Ball b = a;
  mpfr_neg(b.mid_, b.mid_, MPFR_RNDN);  // exact
  return b;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec_, b.prec_));
  int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  if (t != 0) r.bump_rad_ulp();
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec_, b.prec_));
  int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  if (t != 0) r.bump_rad_ulp();
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec_, b.prec_));
  int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // |a| rb + |b| ra + ra rb
  Tmp am(Ball::kRadPrec), bm(Ball::kRadPrec), acc(Ball::kRadPrec),
      term(Ball::kRadPrec);
  mpfr_abs(am, a.mid_, MPFR_RNDU);
  mpfr_abs(bm, b.mid_, MPFR_RNDU);
  mpfr_mul(acc, am, b.rad_, MPFR_RNDU);
  mpfr_mul(term, bm, a.rad_, MPFR_RNDU);
  mpfr_add(acc, acc, term, MPFR_RNDU);
  mpfr_mul(term, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, acc, term, MPFR_RNDU);
  if (t != 0) r.bump_rad_ulp();
  return r;
}

Ball Ball::inv() const {
  // 1/x over the ball: |1/x - 1/m| <= r / (|m| (|m| - r))
  Tmp ml(kRadPrec), gap(kRadPrec), den(kRadPrec);
  mpfr_abs(ml, mid_, MPFR_RNDD);
  mpfr_sub(gap, ml, rad_, MPFR_RNDD);
  if (mpfr_sgn(gap.v) <= 0)
    throw domain_error("Ball::inv: ball contains zero");
  Ball r(prec_);
  int t = mpfr_ui_div(r.mid_, 1, mid_, MPFR_RNDN);
  mpfr_mul(den, ml, gap, MPFR_RNDD);
  mpfr_div(r.rad_, rad_, den, MPFR_RNDU);
  if (t != 0) r.bump_rad_ulp();
  return r;
}

Ball operator/(const Ball& a, const Ball& b) { return a * b.inv(); }

Ball Ball::add_q(const Rational& q) const {
  Ball r(prec_);
  int t = mpfr_add_q(r.mid_, mid_, q.get_mpq_t(), MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  if (t != 0) r.bump_rad_ulp();
  return r;
}

Ball Ball::mul_q(const Rational& q) const {
  if (q == 0) return Ball(prec_);
  Ball r(prec_);
  int t = mpfr_mul_q(r.mid_, mid_, q.get_mpq_t(), MPFR_RNDN);
  Tmp qa(kRadPrec);
  mpfr_set_q(qa, q.get_mpq_t(), MPFR_RNDA);
  mpfr_abs(qa, qa, MPFR_RNDU);
  mpfr_mul(r.rad_, rad_, qa, MPFR_RNDU);
  if (t != 0) r.bump_rad_ulp();
  return r;
}

Ball Ball::div_q(const Rational& q) const {
  if (q == 0) throw domain_error("Ball::div_q: division by zero");
  return mul_q(1 / Rational(q));
}

namespace {

// Monotone-function evaluation on [lo, hi] endpoints with directed rounding.
template <typename F>
Ball monotone_increasing(const Ball& x, mpfr_prec_t prec, F&& f) {
  Tmp lo(prec), hi(prec), flo(prec), fhi(prec);
  x.lower(lo);
  x.upper(hi);
  f(flo, lo, MPFR_RNDD);
  f(fhi, hi, MPFR_RNDU);
  return Ball::from_endpoints_raw(flo, fhi, prec);
}

}  // namespace

Ball Ball::sqrt() const {
  Tmp lo(prec_);
  lower(lo);
  if (mpfr_sgn(lo.v) < 0)
    throw domain_error("Ball::sqrt: ball extends below zero");
  return monotone_increasing(*this, prec_, [](mpfr_ptr out, mpfr_srcptr in,
                                              mpfr_rnd_t rnd) {
    mpfr_sqrt(out, in, rnd);
  });
}

Ball Ball::log() const {
  Tmp lo(prec_);
  lower(lo);
  if (mpfr_sgn(lo.v) <= 0)
    throw domain_error("Ball::log: ball not strictly positive");
  return monotone_increasing(*this, prec_, [](mpfr_ptr out, mpfr_srcptr in,
                                              mpfr_rnd_t rnd) {
    mpfr_log(out, in, rnd);
  });
}

Ball Ball::exp() const {
  return monotone_increasing(*this, prec_, [](mpfr_ptr out, mpfr_srcptr in,
                                              mpfr_rnd_t rnd) {
    mpfr_exp(out, in, rnd);
  });
}

Ball Ball::atan() const {
  return monotone_increasing(*this, prec_, [](mpfr_ptr out, mpfr_srcptr in,
                                              mpfr_rnd_t rnd) {
    mpfr_atan(out, in, rnd);
  });
}

Ball Ball::rootn(unsigned long n) const {
  if (n % 2 == 0)
    throw domain_error("Ball::rootn: even index needs a nonnegative ball");
  return monotone_increasing(*this, prec_, [n](mpfr_ptr out, mpfr_srcptr in,
                                               mpfr_rnd_t rnd) {
    mpfr_rootn_ui(out, in, n, rnd);
  });
}

Ball Ball::pow_q(const Rational& e) const {
  if (!is_positive())
    throw domain_error("Ball::pow_q: base must be strictly positive");
  if (e == 0) return from_long(1, prec_);
  if (is_integer(e) && e.get_num().fits_sint_p()) {
    long k = e.get_num().get_si();
    Ball base = k > 0 ? *this : this->inv();
    unsigned long m = static_cast<unsigned long>(k > 0 ? k : -k);
    Ball acc = from_long(1, prec_);
    while (m) {
      if (m & 1) acc = acc * base;
      base = base.square();
      m >>= 1;
    }
    return acc;
  }
  return log().mul_q(e).exp();
}

Ball Ball::square() const {
  Tmp lo(prec_), hi(prec_), flo(prec_), fhi(prec_);
  lower(lo);
  upper(hi);
  if (mpfr_sgn(lo.v) >= 0) {
    mpfr_sqr(flo, lo, MPFR_RNDD);
    mpfr_sqr(fhi, hi, MPFR_RNDU);
  } else if (mpfr_sgn(hi.v) <= 0) {
    mpfr_sqr(flo, hi, MPFR_RNDD);
    mpfr_sqr(fhi, lo, MPFR_RNDU);
  } else {
    mpfr_set_zero(flo, 1);
    mpfr_sqr(lo, lo, MPFR_RNDU);
    mpfr_sqr(hi, hi, MPFR_RNDU);
    mpfr_max(fhi, lo, hi, MPFR_RNDU);
  }
  return from_endpoints_raw(flo, fhi, prec_);
}

Ball Ball::inflate(const Rational& q) const {
  Ball r = *this;
  Tmp qa(kRadPrec);
  mpfr_set_q(qa, q.get_mpq_t(), MPFR_RNDA);
  mpfr_abs(qa, qa, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, qa, MPFR_RNDU);
  return r;
}

double Ball::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

double Ball::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

std::string Ball::str(size_t digits) const {
  return "[" + mid_str(digits) + " +/- " + rad_str() + "]";
}

std::string Ball::mid_str(size_t digits) const {
  std::vector<char> buf(digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits),
                mid_);
  return std::string(buf.data());
}

std::string Ball::rad_str() const {
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.3Rg", rad_);
  return std::string(buf);
}

Ball atan2_ball(const Ball& y, const Ball& x) {
  mpfr_prec_t prec = std::max(y.precision(), x.precision());
  if (x.is_positive()) return (y / x).atan();
  if (y.is_positive()) {
    Ball half_pi = Ball::pi(prec).div_q(2);
    return half_pi - (x / y).atan();
  }
  if (y.is_negative()) {
    Ball half_pi = Ball::pi(prec).div_q(2);
    return -half_pi - (x / y).atan();
  }
  throw branch_cut_error(
      "atan2_ball: ball straddles the negative real axis or origin");
}

CBall CBall::from_real(Ball r) {
  mpfr_prec_t p = r.precision();
  return CBall(std::move(r), Ball(p));
}

CBall operator-(const CBall& z) { return CBall(-z.re, -z.im); }

CBall operator+(const CBall& a, const CBall& b) {
  return CBall(a.re + b.re, a.im + b.im);
}

CBall operator-(const CBall& a, const CBall& b) {
  return CBall(a.re - b.re, a.im - b.im);
}

CBall operator*(const CBall& a, const CBall& b) {
  return CBall(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

CBall operator/(const CBall& a, const CBall& b) {
  Ball n2 = b.norm2();
  CBall num = a * b.conj();
  return CBall(num.re / n2, num.im / n2);
}

CBall CBall::conj() const { return CBall(re, -im); }

Ball CBall::norm2() const { return re.square() + im.square(); }

CBall CBall::log_principal() const {
  Ball n2 = norm2();
  if (n2.contains_zero())
    throw domain_error("CBall::log_principal: ball touches zero");
  Ball lr = n2.log().div_q(2);
  Ball arg = atan2_ball(im, re);
  return CBall(std::move(lr), std::move(arg));
}

CBall CBall::mul_real(const Ball& r) const { return CBall(re * r, im * r); }

std::string CBall::str(size_t digits) const {
  return re.str(digits) + " + " + im.str(digits) + " i";
}

}  // namespace hyperlog
