#include "hyperlog/rational_function.hpp"

#include <cassert>
#include <sstream>

#include "hyperlog/errors.hpp"

namespace hyperlog {

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero())
    throw domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::exact_div(num, g);
    den = Poly::exact_div(den, g);
  }
  Rational lead = den.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(Poly::variable());
}

RationalFunction RationalFunction::from_reduced(Poly num, Poly den) {
  assert(!den.is_zero());
  assert(Poly::gcd(num, den).degree() <= 0);
  RationalFunction f;
  Rational lead = den.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  if (f.num_.is_zero()) f.den_ = Poly(Rational(1));
  return f;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& x,
                           const RationalFunction& y) {
  return RationalFunction(x.num_ * y.den_ + y.num_ * x.den_,
                          x.den_ * y.den_);
}

RationalFunction operator-(const RationalFunction& x,
                           const RationalFunction& y) {
  return RationalFunction(x.num_ * y.den_ - y.num_ * x.den_,
                          x.den_ * y.den_);
}

RationalFunction operator*(const RationalFunction& x,
                           const RationalFunction& y) {
  return RationalFunction(x.num_ * y.num_, x.den_ * y.den_);
}

RationalFunction operator/(const RationalFunction& x,
                           const RationalFunction& y) {
  if (y.is_zero()) throw domain_error("RationalFunction: division by zero");
  return RationalFunction(x.num_ * y.den_, x.den_ * y.num_);
}

RationalFunction RationalFunction::derivative() const {
  // (n/d)' = (n'd - nd') / d^2
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                          den_ * den_);
}

std::optional<Rational> RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) return std::nullopt;
  return num_.eval(x) / d;
}

std::string RationalFunction::str(const char* var) const {
  if (is_polynomial()) return num_.str(var);
  std::ostringstream os;
  os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
  return os.str();
}

Mat2 Mat2::identity() {
  Mat2 m;
  m.a = RationalFunction(Rational(1));
  m.d = RationalFunction(Rational(1));
  return m;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  return Mat2{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return Mat2{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 Mat2::scaled(const RationalFunction& k) const {
  return Mat2{a * k, b * k, c * k, d * k};
}

Mat2 Mat2::derivative() const {
  return Mat2{a.derivative(), b.derivative(), c.derivative(), d.derivative()};
}

Mat2 Mat2::inverse() const {
  RationalFunction det = det2(*this);
  if (det.is_zero()) throw domain_error("Mat2::inverse: singular matrix");
  return Mat2{d / det, -b / det, -c / det, a / det};
}

std::string Mat2::str(const char* var) const {
  std::ostringstream os;
  os << "[[" << a.str(var) << ", " << b.str(var) << "], [" << c.str(var)
     << ", " << d.str(var) << "]]";
  return os.str();
}

RationalFunction det2(const Mat2& m) { return m.a * m.d - m.b * m.c; }

}  // namespace hyperlog
