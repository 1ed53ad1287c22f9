#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hyperlog/errors.hpp"
#include "hyperlog/polynomial.hpp"
#include "hyperlog/rational.hpp"
#include "hyperlog/rational_function.hpp"
#include "test_util.hpp"

using namespace hyperlog;

TEST_CASE("fractional part") {
  CHECK(frac(make_rational(7, 6)) == make_rational(1, 6));
  CHECK(frac(make_rational(-5, 4)) == make_rational(3, 4));
  CHECK(frac(Rational(3)) == 0);

  testing::RationalGen gen(11);
  for (int i = 0; i < 500; ++i) {
    Rational r = gen.next();
    long n = gen.next_long(-6, 6);
    CHECK(frac(r + Rational(n)) == frac(r));
    CHECK(frac(r) >= 0);
    CHECK(frac(r) < 1);
    Rational mirror = frac(r) + frac(-r);
    CHECK(mirror == (is_integer(r) ? 0 : 1));
  }
}

TEST_CASE("rational parse and print round trip") {
  CHECK(rational_str(make_rational(7, 6)) == "7/6");
  CHECK(rational_str(make_rational(-4, 2)) == "-2");
  CHECK(rational_str(Rational(5)) == "5");
  CHECK(*parse_rational("2/4") == make_rational(1, 2));
  CHECK(*parse_rational("-7/6") == make_rational(-7, 6));
  CHECK(*parse_rational("42") == 42);
  CHECK(!parse_rational(""));
  CHECK(!parse_rational(" 1/2"));
  CHECK(!parse_rational("1/2 "));
  CHECK(!parse_rational("1/-2"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("a/b"));
  CHECK(!parse_rational("1.5"));

  testing::RationalGen gen(12);
  for (int i = 0; i < 200; ++i) {
    Rational q = gen.next();
    CHECK(*parse_rational(rational_str(q)) == q);
  }
}

TEST_CASE("unit classes") {
  auto as_residues = [](const std::vector<UnitClass>& cs) {
    std::vector<long> out;
    for (const auto& c : cs) out.push_back(c.residue.get_si());
    return out;
  };
  CHECK(as_residues(unit_classes(12)) == std::vector<long>{1, 5, 7, 11});
  CHECK(as_residues(unit_classes(6)) == std::vector<long>{1, 5});
  CHECK(as_residues(unit_classes(1)) == std::vector<long>{1});

  for (long n = 2; n <= 60; ++n) {
    auto cs = unit_classes(n);
    size_t phi = 0;  // independent totient count
    for (long s = 1; s < n; ++s)
      if (std::gcd(s, n) == 1) ++phi;
    CHECK(cs.size() == phi);
    for (const auto& c : cs) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), c.residue.get_mpz_t(), c.modulus.get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(1), 4) == 24);
  CHECK(pochhammer(make_rational(1, 2), 2) == make_rational(3, 4));
  CHECK(pochhammer(Rational(-1), 3) == 0);
  CHECK(pochhammer(make_rational(7, 6), 0) == 1);

  testing::RationalGen gen(13);
  for (int i = 0; i < 200; ++i) {
    Rational alpha = gen.next();
    unsigned long m = static_cast<unsigned long>(gen.next_long(0, 8));
    unsigned long n = static_cast<unsigned long>(gen.next_long(0, 8));
    CHECK(pochhammer(alpha, m + n) ==
          pochhammer(alpha, m) * pochhammer(alpha + Rational(long(m)), n));
  }
}

TEST_CASE("polynomial arithmetic and gcd") {
  Poly x = Poly::variable();
  Poly p = x * x - Poly(Rational(1));              // x^2 - 1
  Poly q = x - Poly(Rational(1));                  // x - 1
  CHECK(Poly::gcd(p, q) == q.monic());
  auto [quo, rem] = Poly::divrem(p, q);
  CHECK(rem.is_zero());
  CHECK(quo == x + Poly(Rational(1)));

  CHECK(p.eval(Rational(3)) == 8);
  CHECK(p.derivative() == Rational(2) * x);

  testing::RationalGen gen(14, 6, 6);
  auto random_poly = [&gen](int deg) {
    std::vector<Rational> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(gen.next());
    return Poly::from_coeffs(std::move(cs));
  };
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(int(gen.next_long(0, 5)));
    Poly b = random_poly(int(gen.next_long(0, 5)));
    Poly c = random_poly(int(gen.next_long(0, 3)));
    CHECK((a + b) - b == a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) {
      auto [s, r] = Poly::divrem(a, b);
      CHECK(s * b + r == a);
      CHECK(r.degree() < b.degree());
      // gcd divides both
      Poly g = Poly::gcd(a, b);
      if (!a.is_zero()) CHECK(Poly::divrem(a, g).second.is_zero());
      CHECK(Poly::divrem(b, g).second.is_zero());
      // common factor survives into the gcd
      Poly ac = a * c, bc = b * c;
      if (!c.is_zero() && !a.is_zero()) {
        Poly g2 = Poly::gcd(ac, bc);
        CHECK(Poly::divrem(g2, c.monic()).second.is_zero());
      }
    }
  }
}

TEST_CASE("rational function field") {
  RationalFunction t = RationalFunction::variable();
  RationalFunction one(Rational(1));

  // reduction to canonical form
  Poly x = Poly::variable();
  RationalFunction f(x * x - Poly(Rational(1)), x - Poly(Rational(1)));
  CHECK(f == t + one);

  testing::RationalGen gen(15, 5, 5);
  auto random_rf = [&gen]() {
    auto poly = [&gen](int deg) {
      std::vector<Rational> cs;
      for (int i = 0; i <= deg; ++i) cs.push_back(gen.next());
      return Poly::from_coeffs(std::move(cs));
    };
    Poly den;
    while (den.is_zero()) den = poly(int(gen.next_long(0, 3)));
    return RationalFunction(poly(int(gen.next_long(0, 3))), den);
  };
  for (int i = 0; i < 100; ++i) {
    RationalFunction a = random_rf(), b = random_rf();
    CHECK((a + b) - b == a);
    if (!a.is_zero()) CHECK(a * (one / a) == one);
    CHECK((a * b).num().degree() <= a.num().degree() + b.num().degree());
  }
}

TEST_CASE("rational function evaluation at poles") {
  Poly x = Poly::variable();
  RationalFunction f(Poly(Rational(1)), x - Poly(Rational(1)));
  CHECK(!f.eval(Rational(1)).has_value());
  CHECK(*f.eval(Rational(2)) == 1);
  CHECK(*f.eval(Rational(0)) == -1);
}

TEST_CASE("det2") {
  Mat2 id = Mat2::identity();
  CHECK(det2(id) == RationalFunction(Rational(1)));

  RationalFunction t = RationalFunction::variable();
  Mat2 diag{t, RationalFunction(), RationalFunction(), t};
  CHECK(det2(diag) == t * t);

  RationalFunction one_minus_t = RationalFunction(Rational(1)) - t;
  Mat2 degenerate{one_minus_t, t, one_minus_t, t};
  CHECK(det2(degenerate).is_zero());

  // inverse against identity
  Mat2 m{t + RationalFunction(Rational(2)), t, RationalFunction(Rational(1)),
         t * t + RationalFunction(Rational(1))};
  CHECK(m * m.inverse() == Mat2::identity());
}
