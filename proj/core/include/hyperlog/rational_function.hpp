#pragma once

#include <array>
#include <optional>
#include <string>

#include "hyperlog/polynomial.hpp"

namespace hyperlog {

// Univariate rational function over Q, kept reduced (gcd(num,den)=1) with a
// monic denominator, so equality is coefficient-wise.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  explicit RationalFunction(const Rational& c)
      : num_(c), den_(Rational(1)) {}
  explicit RationalFunction(Poly p) : num_(std::move(p)), den_(Rational(1)) {}
  RationalFunction(Poly num, Poly den);  // reduces
  static RationalFunction variable();
  // caller guarantees gcd(num,den)=1 and den != 0
  static RationalFunction from_reduced(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction&,
                                    const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&,
                                    const RationalFunction&);
  friend RationalFunction operator*(const RationalFunction&,
                                    const RationalFunction&);
  friend RationalFunction operator/(const RationalFunction&,
                                    const RationalFunction&);
  RationalFunction& operator+=(const RationalFunction& o) {
    return *this = *this + o;
  }
  RationalFunction& operator-=(const RationalFunction& o) {
    return *this = *this - o;
  }
  RationalFunction& operator*=(const RationalFunction& o) {
    return *this = *this * o;
  }
  RationalFunction& operator/=(const RationalFunction& o) {
    return *this = *this / o;
  }

  friend bool operator==(const RationalFunction&,
                         const RationalFunction&) = default;

  RationalFunction derivative() const;
  // nullopt when x is a pole
  std::optional<Rational> eval(const Rational& x) const;

  std::string str(const char* var = "t") const;

 private:
  Poly num_;
  Poly den_;
};

// 2x2 matrix over the rational function field, row-major [[a,b],[c,d]].
struct Mat2 {
  RationalFunction a, b, c, d;

  static Mat2 identity();
  static Mat2 zero() { return Mat2{}; }

  friend Mat2 operator+(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  Mat2 scaled(const RationalFunction& k) const;
  Mat2 derivative() const;
  Mat2 inverse() const;  // throws domain_error when the determinant is 0
  RationalFunction trace() const { return a + d; }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::string str(const char* var = "t") const;
};

RationalFunction det2(const Mat2& m);

}  // namespace hyperlog
