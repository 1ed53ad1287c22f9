#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hyperlog/errors.hpp"
#include "hyperlog/hyper_eval.hpp"
#include "test_util.hpp"

using namespace hyperlog;

namespace {

const Rational kHalf = make_rational(1, 2);

Ball two_ln2(mpfr_prec_t prec) {
  return Ball::from_long(2, prec).log().mul_q(Rational(2));
}

}  // namespace

TEST_CASE("pfq basic values") {
  // empty sum beyond n=0
  Ball b = pfq({kHalf, kHalf}, {make_rational(3, 2)}, Rational(0), 64);
  CHECK(b.contains(Rational(1)));
  CHECK(b.rad_double() < 1e-15);

  // 2F1(1,1;2;x) = -log(1-x)/x; at 1/2 the value is 2 log 2
  for (mpfr_prec_t prec : {64, 128, 256}) {
    Ball f = pfq({Rational(1), Rational(1)}, {Rational(2)}, kHalf, prec);
    Ball oracle = two_ln2(prec + 64);
    CHECK(f.contains_ball(oracle));
  }

  // 3F2 value also satisfies the explicit-log identity; here just check
  // stability under precision doubling
  Ball coarse = pfq({Rational(1), Rational(1), kHalf},
                    {make_rational(7, 6), make_rational(11, 6)}, kHalf, 64);
  Ball fine = pfq({Rational(1), Rational(1), kHalf},
                  {make_rational(7, 6), make_rational(11, 6)}, kHalf, 128);
  CHECK(coarse.contains_ball(fine.round_to(64)));
}

TEST_CASE("pfq domain errors") {
  CHECK_THROWS_AS(pfq({Rational(1)}, {Rational(-2)}, kHalf, 64),
                  domain_error);
  CHECK_THROWS_AS(
      pfq({Rational(1), Rational(1)}, {Rational(2)}, Rational(1), 64),
      domain_error);
  CHECK_THROWS_AS(
      pfq({Rational(1), Rational(1)}, {Rational(2)}, make_rational(3, 2), 64),
      domain_error);
  // 2F0 diverges for x != 0
  CHECK_THROWS_AS(pfq({Rational(1), Rational(1)}, {}, kHalf, 64),
                  domain_error);
}

TEST_CASE("pfq parameter symmetries and cancellation") {
  testing::RationalGen gen(51, 8, 8);
  int done = 0;
  while (done < 60) {
    Rational a1 = gen.next_non_integer(), a2 = gen.next_non_integer();
    Rational b1 = gen.next_non_integer(), c = gen.next_non_integer();
    Rational x = make_rational(gen.next_long(1, 9), 10);
    // permutation of upper parameters
    Ball lhs = pfq({a1, a2}, {b1}, x, 96);
    Ball rhs = pfq({a2, a1}, {b1}, x, 96);
    CHECK((lhs - rhs).contains_zero());
    // shared parameter cancels
    Ball with = pfq({a1, a2, c}, {b1, c}, x, 96);
    CHECK((with - lhs).contains_zero());
    ++done;
  }
}

TEST_CASE("entire series evaluate outside the unit disk") {
  // 1F1(1/2; 3/2; -1) = (sqrt(pi)/2) erf(1): an oracle mpfr owns outright
  Ball f = pfq({make_rational(1, 2)}, {make_rational(3, 2)}, Rational(-1),
               128);
  mpfr_t lo, hi;
  mpfr_inits2(192, lo, hi, nullptr);
  mpfr_set_ui(lo, 1, MPFR_RNDN);
  mpfr_erf(lo, lo, MPFR_RNDD);
  mpfr_set_ui(hi, 1, MPFR_RNDN);
  mpfr_erf(hi, hi, MPFR_RNDU);
  Ball erf1 = Ball::from_endpoints_raw(lo, hi, 192);
  mpfr_clears(lo, hi, nullptr);
  Ball oracle = Ball::pi(192).sqrt().mul_q(make_rational(1, 2)) * erf1;
  CHECK((f - oracle).contains_zero());
}

TEST_CASE("exact partial sums beyond the truncation stay inside the ball") {
  // x rational: partial sums are exact rationals; every S_k past the
  // internal truncation must lie in the reported ball
  const std::vector<Rational> up = {Rational(1), Rational(1), kHalf};
  const std::vector<Rational> lo = {make_rational(7, 6),
                                    make_rational(11, 6)};
  const Rational x = kHalf;
  Ball ball = pfq(up, lo, x, 96);
  Rational sum = 0, term = 1, xpow = 1;
  bool entered = false;
  for (unsigned n = 0; n <= 400; ++n) {
    sum += term * xpow;
    if (n >= 350) {  // far past any truncation used at 96 bits
      CHECK(ball.contains(sum));
      entered = true;
    }
    Rational step = 1;
    for (const Rational& a : up) step *= a + Rational(long(n));
    for (const Rational& b : lo) step /= b + Rational(long(n));
    step /= Rational(long(n + 1));
    term *= step;
    xpow *= x;
  }
  CHECK(entered);
}

TEST_CASE("tail bound soundness: partial sums at 2M stay inside") {
  // the ball at precision p must contain much finer evaluations
  testing::RationalGen gen(52, 8, 8);
  int done = 0;
  while (done < 40) {
    Rational a1 = gen.next_non_integer(), a2 = gen.next_non_integer();
    Rational b1 = gen.next_non_integer();
    Rational x = make_rational(gen.next_long(1, 9), 10);
    Ball coarse = pfq({a1, a2}, {b1}, x, 48);
    Ball fine = pfq({a1, a2}, {b1}, x, 192);
    CAPTURE(rational_str(a1));
    CAPTURE(rational_str(a2));
    CAPTURE(rational_str(b1));
    CAPTURE(rational_str(x));
    CHECK(coarse.contains_ball(fine.round_to(48)));
    ++done;
  }
}

TEST_CASE("value at 1") {
  // (1/2, 7/6, 11/6): converges since 7/6 + 11/6 - 1/2 - 2 = 1/2 > 0
  Ball v = pfq_at_1(kHalf, make_rational(7, 6), make_rational(11, 6), 64,
                    40000);
  CHECK(v.is_finite());
  CHECK(v.is_positive());
  // doubled-cap evaluation lands inside
  Ball v2 = pfq_at_1(kHalf, make_rational(7, 6), make_rational(11, 6), 64,
                     80000);
  CHECK(v.contains_ball(v2.round_to(64)));

  CHECK_THROWS_AS(
      pfq_at_1(kHalf, make_rational(1, 6), make_rational(1, 4), 64),
      domain_error);
  // boundary arithmetic: a+b-q-2 = 1/2 > 0 converges
  CHECK_NOTHROW(pfq_at_1(kHalf, make_rational(3, 2), make_rational(3, 2), 32,
                         20000));
}

TEST_CASE("rational power") {
  Ball neg = Ball::from_rational(make_rational(-1, 8), 96);
  Ball r = rational_power(neg, make_rational(1, 3), BranchPolicy::RealOdd);
  CHECK(r.contains(make_rational(-1, 2)));

  Ball four = Ball::from_long(4, 96);
  CHECK(rational_power(four, kHalf).contains(Rational(2)));

  // (1-lambda)^(k/l-1) at lambda=-1, k/l=1/2: 2^(-1/2)
  Ball base = Ball::from_long(2, 96);
  Ball p = rational_power(base, make_rational(-1, 2));
  CHECK((p.square() - Ball::from_rational(kHalf, 96)).contains_zero());

  CHECK_THROWS_AS(rational_power(neg, kHalf), branch_cut_error);
  CHECK_THROWS_AS(rational_power(neg, kHalf, BranchPolicy::RealOdd),
                  domain_error);
  CHECK_THROWS_AS(
      rational_power(Ball(96), make_rational(-1, 3), BranchPolicy::RealOdd),
      domain_error);
}

TEST_CASE("f1 f2") {
  Rational mu = kHalf, b1 = make_rational(1, 6), b2 = make_rational(5, 6);
  auto [f1, f2] = f1f2(mu, b1, b2, Rational(-1), 128);
  CHECK(f1.is_finite());
  CHECK(f2.is_finite());
  CHECK(f1.is_positive());
  // ratio stable under doubled precision
  auto [g1, g2] = f1f2(mu, b1, b2, Rational(-1), 256);
  Ball ratio_c = f2 / f1;
  Ball ratio_f = g2 / g1;
  CHECK(ratio_c.contains_ball(ratio_f.round_to(128)));

  // far in the left tail the 3F2 factor heads to 1, so F_i ~ (1-l)^(mu-1)
  Rational far(-1000000);
  auto [h1, h2] = f1f2(mu, b1, b2, far, 96);
  Ball approx = rational_power(Ball::from_rational(1 - far, 96), mu - 1);
  Ball rel = (h1 - approx) / approx;
  mpfr_t hi;
  mpfr_init2(hi, Ball::kRadPrec);
  rel.abs_upper(hi);
  CHECK(mpfr_cmp_d(hi, 1e-5) < 0);
  mpfr_clear(hi);

  CHECK_THROWS_AS(f1f2(mu, b1, b2, Rational(1), 64), domain_error);
  CHECK_THROWS_AS(f1f2(Rational(1), b1, b2, Rational(-1), 64),
                  precondition_error);
  // mu - beta1 - beta2 = 1/2 - 1 = -1/2 fine; but mu - beta with beta = mu
  CHECK_THROWS_AS(f1f2(mu, mu, b2, Rational(-1), 64), precondition_error);
}
