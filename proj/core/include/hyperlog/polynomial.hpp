#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperlog/rational.hpp"

namespace hyperlog {

// Dense univariate polynomial with exact rational coefficients.
// Coefficient storage never keeps trailing zeros; degree() of the zero
// polynomial is -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(long c) : Poly(Rational(c)) {}
  static Poly variable();
  static Poly from_coeffs(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // coefficient of x^k (zero beyond the degree)
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& k);
  friend Poly operator*(Poly a, const Rational& k) { return a *= k; }
  friend Poly operator*(const Rational& k, Poly a) { return a *= k; }

  friend bool operator==(const Poly&, const Poly&) = default;

  // quotient and remainder with deg(rem) < deg(divisor); divisor nonzero
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  // division known to be exact; throws internal_error on nonzero remainder
  static Poly exact_div(const Poly& a, const Poly& b);
  // monic gcd in Q[x]; gcd(0,0) = 0
  static Poly gcd(const Poly& a, const Poly& b);

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  Poly monic() const;
  Poly pow(unsigned n) const;

  std::string str(const char* var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace hyperlog
