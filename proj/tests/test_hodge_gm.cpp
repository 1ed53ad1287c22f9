#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperlog/criteria.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/gauss_manin.hpp"
#include "hyperlog/hodge.hpp"
#include "test_util.hpp"

using namespace hyperlog;

TEST_CASE("gauss type data") {
  GaussTypeData g = gauss_type_data(6, 1, 2, 1, 1);
  CHECK(g.a_n == 0);
  CHECK(g.b_n == 0);
  CHECK(g.c_n == 0);
  CHECK(g.alpha_n == make_rational(5, 6));
  CHECK(g.beta_n == make_rational(2, 3));
  CHECK(g.d1 == 1);
  CHECK(g.d2 == 2);

  CHECK_THROWS_AS(gauss_type_data(6, 2, 3, 1, 3), precondition_error);
  CHECK_THROWS_AS(gauss_type_data(6, 1, 2, 1, 4), precondition_error);
  CHECK_THROWS_AS(gauss_type_data(6, 1, 2, 2, 1), precondition_error);

  GaussTypeData g5 = gauss_type_data(5, 1, 2, 1, 1);
  CHECK(g5.alpha_n == make_rational(4, 5));
  CHECK(g5.beta_n == make_rational(3, 5));
  CHECK(g5.c_n == 0);

  // structural identities across random valid inputs
  testing::RationalGen gen(41);
  int found = 0;
  while (found < 200) {
    long N = gen.next_long(2, 40);
    long a = gen.next_long(1, N - 1), b = gen.next_long(1, N - 1);
    long n = gen.next_long(1, N - 1);
    std::vector<long> divisors;
    for (long d = 1; d <= N; ++d)
      if (N % d == 0) divisors.push_back(d);
    long d = divisors[size_t(gen.next_long(0, long(divisors.size()) - 1))];
    try {
      GaussTypeData gd = gauss_type_data(N, a, b, n, d);
      ++found;
      CHECK(gd.c_n == gd.n - gd.b_n - 1);
      CHECK(gd.c_n ==
            floor_int(make_rational(N * n - b * n, N)));
      CHECK(gd.alpha_n > 0);
      CHECK(gd.alpha_n < 1);
      CHECK(gd.beta_n > 0);
      CHECK(gd.beta_n < 1);
      CHECK(gd.alpha_n == 1 - frac(make_rational(a * n, N)));
    } catch (const precondition_error&) {
      // not Gauss type or bad gcds; skip
    }
  }
}

TEST_CASE("d_chi and its delta decomposition") {
  HodgeInput h1{make_rational(1, 2), make_rational(1, 6), make_rational(5, 6)};
  CHECK(d_chi(h1) == 1);

  HodgeInput h2{make_rational(1, 2), make_rational(1, 6), make_rational(1, 4)};
  int d2 = d_chi(h2);
  auto deltas2 = d_chi_deltas(h2);
  CHECK(d2 == deltas2[0] + deltas2[1]);
  // cross-check against the s=1 bracketing form
  bool bracket = (frac(h2.beta1) < frac(h2.mu) && frac(h2.mu) < frac(h2.beta2)) ||
                 (frac(h2.beta2) < frac(h2.mu) && frac(h2.mu) < frac(h2.beta1));
  CHECK((d2 == 1) == bracket);

  HodgeInput h3{make_rational(1, 3), make_rational(1, 6), make_rational(1, 6)};
  int d3 = d_chi(h3);
  CHECK(d3 == 0);  // 2*(2/3) + 2*(1/6 - 5/6) = 0
  CHECK((d3 >= 0 && d3 <= 2));

  CHECK_THROWS_AS(
      d_chi(HodgeInput{Rational(1), make_rational(1, 6), make_rational(5, 6)}),
      precondition_error);
  CHECK_THROWS_AS(
      d_chi(HodgeInput{make_rational(1, 6), make_rational(7, 6),
                       make_rational(5, 6)}),
      precondition_error);

  testing::RationalGen gen(42);
  for (int i = 0; i < 10000; ++i) {
    HodgeInput h{gen.next_non_integer(), gen.next(), gen.next()};
    if (is_integer(h.beta1 - h.mu) || is_integer(h.beta2 - h.mu)) continue;
    auto deltas = d_chi_deltas(h);
    CHECK((deltas[0] == 0 || deltas[0] == 1));
    CHECK((deltas[1] == 0 || deltas[1] == 1));
    int d = d_chi(h);
    CHECK(d == deltas[0] + deltas[1]);
    CHECK((d >= 0 && d <= 2));
  }
}

TEST_CASE("hodge triple table") {
  CHECK(hodge_triple(2) == HodgeTriple{1, 1, 0});
  CHECK(hodge_triple(1) == HodgeTriple{0, 2, 0});
  CHECK(hodge_triple(0) == HodgeTriple{0, 1, 1});
  CHECK_THROWS_AS(hodge_triple(3), domain_error);
  CHECK_THROWS_AS(hodge_triple(-1), domain_error);
}

TEST_CASE("tate check") {
  CHECK(tate_check(
      HodgeInput{make_rational(1, 2), make_rational(1, 6), make_rational(5, 6)}));
  CHECK(!tate_check(
      HodgeInput{make_rational(1, 2), make_rational(1, 6), make_rational(1, 4)}));

  // agreement with the eq1 bracketing criterion under (q,a,b) <-> (mu,b1,b2)
  testing::RationalGen gen(43);
  int agreed = 0;
  while (agreed < 400) {
    HGParams p{gen.next_non_integer(), gen.next_non_integer(),
               gen.next_non_integer()};
    if (!check_preconditions(p).empty()) continue;
    HodgeInput h{p.q, p.a, p.b};
    bool eq1_everywhere = true;
    for (const UnitClass& s : unit_classes(p.joint_modulus()))
      eq1_everywhere = eq1_everywhere && eq1_holds_at(p, s);
    CHECK(tate_check(h) == eq1_everywhere);
    ++agreed;
  }
}

TEST_CASE("riemann scheme") {
  GaussTypeData g = gauss_type_data(6, 1, 2, 1, 1);
  RiemannScheme rs = RiemannScheme::from_exponents(g.alpha_n, g.beta_n);
  CHECK(rs.at_zero[1] == 1 - g.alpha_n - g.beta_n);
  CHECK(rs.exponent_sum() == 1);

  testing::RationalGen gen(44);
  for (int i = 0; i < 200; ++i) {
    Rational alpha = gen.next_non_integer(), beta = gen.next_non_integer();
    CHECK(RiemannScheme::from_exponents(alpha, beta).exponent_sum() == 1);
  }
}

TEST_CASE("connection matrix entries") {
  Mat2 m = connection_matrix(make_rational(1, 6), make_rational(2, 3));
  RationalFunction t = RationalFunction::variable();
  RationalFunction one(Rational(1));
  CHECK(m.a.is_zero());
  CHECK(m.b == RationalFunction(make_rational(2, 3)) / t);
  CHECK(m.c == RationalFunction(make_rational(1, 6)) / (one - t));
  CHECK(m.d == RationalFunction(make_rational(-5, 6)) / t);

  // residues of the raw connection at 0 and 1
  ResidueMatrix r0 = residue_at(m, Rational(0));
  CHECK(r0.trace() == make_rational(-5, 6));
  CHECK(r0.det() == 0);
  Eigenvalues e0 = eigenvalues(r0);
  REQUIRE(e0.rational_pair);
  CHECK(((e0.first == 0 && e0.second == make_rational(-5, 6)) ||
         (e0.second == 0 && e0.first == make_rational(-5, 6))));

  // at t=1 the residue is strictly triangular with entry -beta1: rank 1,
  // eigenvalues both zero (nilpotent, matching the unipotent monodromy)
  ResidueMatrix r1 = residue_at(m, Rational(1));
  CHECK(r1.c == make_rational(-1, 6));
  Eigenvalues e1 = eigenvalues(r1);
  REQUIRE(e1.rational_pair);
  CHECK(e1.first == 0);
  CHECK(e1.second == 0);
  CHECK(r1.det() == 0);
  CHECK((r1.a != 0 || r1.b != 0 || r1.c != 0 || r1.d != 0));
}

TEST_CASE("canonical frames") {
  Rational b1 = make_rational(1, 6), b2 = make_rational(2, 3);
  Mat2 g0 = canonical_frame(b1, b2, 0);
  RationalFunction t = RationalFunction::variable();
  CHECK(g0.a == RationalFunction(Rational(1)));
  CHECK(g0.b == t * RationalFunction(b2));
  CHECK(g0.c.is_zero());
  CHECK(g0.d == t * RationalFunction(b1 + b2));

  Mat2 g1 = canonical_frame(b1, b2, 1);
  CHECK(g1 == Mat2::identity());

  Rational c1 = make_rational(5, 6), c2 = make_rational(2, 3);
  Mat2 gbig = canonical_frame(c1, c2, 0);
  CHECK(gbig.a == t);
  CHECK(gbig.b == RationalFunction(c1 + c2 - 1));
  CHECK(gbig.d == t * RationalFunction(c1));
}

TEST_CASE("canonical extension residues lie in [0,1)") {
  // the two worked cases
  Eigenvalues e = residue_eigenvalues_in_frame(make_rational(1, 6),
                                               make_rational(2, 3), 0);
  REQUIRE(e.rational_pair);
  CHECK(e.in_unit_interval);
  CHECK(((e.first == 0 && e.second == make_rational(1, 6)) ||
         (e.second == 0 && e.first == make_rational(1, 6))));

  Eigenvalues ebig = residue_eigenvalues_in_frame(make_rational(5, 6),
                                                  make_rational(2, 3), 0);
  CHECK(ebig.in_unit_interval);

  Eigenvalues e1 = residue_eigenvalues_in_frame(make_rational(1, 6),
                                                make_rational(2, 3), 1);
  REQUIRE(e1.rational_pair);
  CHECK(e1.first == 0);
  CHECK(e1.second == 0);
  CHECK(e1.in_unit_interval);

  // 50 random valid exponent pairs at both points
  testing::RationalGen gen(45);
  int done = 0;
  while (done < 50) {
    Rational b1 = gen.next_unit_interval();
    Rational b2 = gen.next_unit_interval();
    for (int point : {0, 1}) {
      Eigenvalues ev = residue_eigenvalues_in_frame(b1, b2, point);
      CAPTURE(rational_str(b1));
      CAPTURE(rational_str(b2));
      CAPTURE(point);
      CHECK(ev.in_unit_interval);
    }
    ++done;
  }
}
