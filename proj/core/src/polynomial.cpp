#include "hyperlog/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {
const Rational kZero = 0;
}

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::variable() {
  return Poly::from_coeffs({Rational(0), Rational(1)});
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return kZero;
  return c_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
  if (is_zero()) return kZero;
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly::from_coeffs(std::move(out));
}

Poly& Poly::operator*=(const Rational& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw domain_error("Poly::divrem: division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - db + 1),
                            Rational(0));
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<size_t>(k + db)] / b.leading();
    if (q == 0) continue;
    quo[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(k + j)] -= q * b.coeff(j);
  }
  return {Poly::from_coeffs(std::move(quo)), Poly::from_coeffs(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw internal_error("Poly::exact_div: nonzero remainder");
  return q;
}

namespace {

// Integer image of a rational polynomial: primitive part with positive
// leading coefficient (content dropped; it cannot affect a monic gcd).
std::vector<Integer> primitive_z(const Poly& p) {
  Integer den_lcm = 1;
  for (const Rational& c : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  std::vector<Integer> z;
  z.reserve(p.coeffs().size());
  Integer content = 0;
  for (const Rational& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    z.push_back(std::move(v));
  }
  if (content > 1)
    for (Integer& v : z) v /= content;
  if (!z.empty() && z.back() < 0)
    for (Integer& v : z) v = -v;
  return z;
}

void strip_content(std::vector<Integer>& p) {
  Integer content = 0;
  for (const Integer& v : p)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1)
    for (Integer& v : p) v /= content;
  if (!p.empty() && p.back() < 0)
    for (Integer& v : p) v = -v;
}

void trim_z(std::vector<Integer>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0), content-stripped after
// each elimination step to keep the coefficients small.
std::vector<Integer> pseudo_rem_primitive(std::vector<Integer> a,
                                          const std::vector<Integer>& b) {
  const size_t db = b.size() - 1;
  while (a.size() >= b.size() && !a.empty()) {
    const Integer& la = a.back();
    const Integer& lb = b.back();
    Integer g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    Integer ca = la / g;  // multiply a by lb/g, subtract (la/g) x^k b
    Integer cb = lb / g;
    const size_t k = a.size() - b.size();
    for (Integer& v : a) v *= cb;
    for (size_t j = 0; j <= db; ++j) a[k + j] -= ca * b[j];
    trim_z(a);
    strip_content(a);
  }
  return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<Integer> u = primitive_z(a);
  std::vector<Integer> v = primitive_z(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<Integer> r = pseudo_rem_primitive(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> out;
  out.reserve(u.size());
  for (const Integer& z : u) out.emplace_back(z);
  return Poly::from_coeffs(std::move(out)).monic();
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly();
  std::vector<Rational> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rational(long(i)) * c_[i];
  return Poly::from_coeffs(std::move(out));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Rational inv = 1 / leading();
  r *= inv;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (n) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& c = coeff(k);
    if (c == 0) continue;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      os << rational_str(a);
    } else {
      if (a != 1) os << rational_str(a) << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hyperlog
