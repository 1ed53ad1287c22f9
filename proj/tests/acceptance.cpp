// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hyperlog/contiguity.hpp"
#include "hyperlog/criteria.hpp"
#include "hyperlog/errors.hpp"
#include "hyperlog/explicit_log.hpp"
#include "hyperlog/gauss_manin.hpp"
#include "hyperlog/hodge.hpp"
#include "hyperlog/hyper_eval.hpp"
#include "hyperlog/quadrature.hpp"
#include "hyperlog/regulator.hpp"
#include "test_util.hpp"

using namespace hyperlog;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, double ms) {
  std::printf("[%s] %2d. %-58s (%.1f ms)\n", pass ? "PASS" : "FAIL", idx,
              name.c_str(), ms);
  if (!pass) ++failures;
}

void criterion(int idx, const std::string& name,
               const std::function<bool()>& body) {
  auto t0 = Clock::now();
  bool pass = false;
  std::string suffix;
  try {
    pass = body();
  } catch (const std::exception& e) {
    suffix = std::string(" [exception: ") + e.what() + "]";
  }
  double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  report(idx, name + suffix, pass, ms);
}

HGParams random_admissible(hyperlog::testing::RationalGen& gen) {
  for (;;) {
    HGParams p{gen.next_non_integer(), gen.next_non_integer(),
               gen.next_non_integer()};
    if (check_preconditions(p).empty()) return p;
  }
}

// the sum form of the functional criterion, restated as its own oracle
bool eq1_sum_form(const HGParams& p, const UnitClass& s) {
  Rational sum = frac(s.times(p.a)) + frac(s.times(p.b)) +
                 2 * frac(s.times(-p.q)) - frac(s.times(p.a - p.q)) -
                 frac(s.times(p.b - p.q));
  return sum == 1;
}

bool eq1_bracket_form(const HGParams& p, const UnitClass& s) {
  Rational sa = frac(s.times(p.a)), sb = frac(s.times(p.b)),
           sq = frac(s.times(p.q));
  return (std::min(sa, sb) < sq) && (sq < std::max(sa, sb));
}

}  // namespace

int main() {
  criterion(1, "paper triples classify to their labels, < 10 ms each", [] {
    auto t0 = Clock::now();
    ClassificationRecord log_rec = classify(
        HGParams{make_rational(1, 2), make_rational(7, 6), make_rational(11, 6)});
    double ms1 =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    t0 = Clock::now();
    ClassificationRecord at1 = classify(
        HGParams{make_rational(1, 2), make_rational(1, 6), make_rational(1, 4)});
    double ms2 =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

    bool ok = log_rec.label == Label::LogFunctional;
    ok = ok && at1.label == Label::LogAtOneOnly;
    ok = ok && at1.modulus == 12;
    for (long s : {1, 5, 7, 11})
      ok = ok && at1.eq2_per_class.at(s);
    ok = ok && at1.eq1_per_class.at(1) == false;
    return ok && ms1 < 10.0 && ms2 < 10.0;
  });

  // one random corpus for criteria 2 and 3
  std::vector<std::pair<HGParams, UnitClass>> corpus;
  {
    hyperlog::testing::RationalGen gen(2024, 16, 32);
    while (corpus.size() < 12000) {
      HGParams p = random_admissible(gen);
      for (const UnitClass& s : unit_classes(p.joint_modulus()))
        corpus.emplace_back(p, s);
    }
  }

  criterion(2, "sum form = strict bracketing on 10^4+ random (q,a,b,s)",
            [&corpus] {
              size_t mismatches = 0;
              for (const auto& [p, s] : corpus)
                if (eq1_sum_form(p, s) != eq1_bracket_form(p, s)) ++mismatches;
              return mismatches == 0 && corpus.size() >= 10000;
            });

  criterion(3, "eq1 implies eq2 on the same corpus", [&corpus] {
    size_t violations = 0;
    for (const auto& [p, s] : corpus)
      if (eq1_holds_at(p, s) && !eq2_holds_at(p, s)) ++violations;
    return violations == 0;
  });

  criterion(4, "explicit-log residual: rad < 2^-80 at x=1/4,1/2,3/4 (192b)",
            [] {
              auto t0 = Clock::now();
              bool ok = true;
              for (Rational x : {make_rational(1, 4), make_rational(1, 2),
                                 make_rational(3, 4)}) {
                CBall r = explicit_residual(x, 192);
                ok = ok && r.contains_zero();
                ok = ok && r.re.rad_double() < std::ldexp(1.0, -80);
                ok = ok && r.im.rad_double() < std::ldexp(1.0, -80);
              }
              double sec = std::chrono::duration<double>(Clock::now() - t0)
                               .count();
              return ok && sec < 30.0;
            });

  criterion(5, "det closed form (25 random sets) + clean scan to r=200",
            [] {
              auto t0 = Clock::now();
              hyperlog::testing::RationalGen gen(2025);
              bool ok = true;
              int done = 0;
              while (done < 25) {
                RecurrenceParams p{gen.next_non_integer(),
                                   gen.next_non_integer(),
                                   gen.next_non_integer()};
                try {
                  p.validate();
                } catch (const precondition_error&) {
                  continue;
                }
                ok = ok && e_det(p, 0) == e_det0_closed_form(p, p.mu);
                ++done;
              }
              RecurrenceParams paper{make_rational(1, 2), make_rational(1, 6),
                                     make_rational(5, 6)};
              ok = ok && det_scan(paper, 200).empty();
              double sec = std::chrono::duration<double>(Clock::now() - t0)
                               .count();
              return ok && sec < 60.0;
            });

  criterion(6, "four contiguity identities + exact transport to order 40",
            [] {
              hyperlog::testing::RationalGen gen(2026, 9, 9);
              const std::array<OpKind, 4> kinds = {
                  OpKind::LowerB, OpKind::RaiseA, OpKind::RaiseB,
                  OpKind::LowerA};
              bool ok = true;
              int done = 0;
              while (done < 20) {
                std::array<Rational, 3> up{gen.next_non_integer(),
                                           gen.next_non_integer(),
                                           gen.next_non_integer()};
                std::array<Rational, 2> lo{gen.next_non_integer(),
                                           gen.next_non_integer()};
                ContiguityOp probes[4];
                bool usable = true;
                for (size_t k = 0; k < 4; ++k) {
                  probes[k] = ContiguityOp{kinds[k], up, lo};
                  if (probes[k].prefactor() == 0) usable = false;
                }
                if (!usable) continue;

                for (const auto& op : probes) {
                  // numeric identity at the three arguments
                  for (Rational x : {make_rational(1, 4), make_rational(1, 3),
                                     make_rational(1, 2)}) {
                    Ball r = verify_contiguity(op.kind, up, lo, x, 128);
                    ok = ok && r.contains_zero();
                  }
                  // exact coefficient transport to order 40
                  SeriesSpec base{{up[0], up[1], up[2]}, {lo[0], lo[1]}, 42};
                  TruncatedSeries shifted =
                      apply_op(op, series_expand(base));
                  auto su = op.shifted_upper();
                  auto sl = op.shifted_lower();
                  SeriesSpec target;
                  target.upper.assign(su.begin(), su.end());
                  target.lower.assign(sl.begin(), sl.end());
                  target.order = shifted.spec.order;
                  ok = ok && shifted.coeffs == series_expand(target).coeffs;
                  ok = ok && shifted.spec.order >= 40;
                }
                ++done;
              }
              return ok;
            });

  criterion(7, "euler integral ratio residual < 1e-15 (two fibrations)", [] {
    bool ok = true;
    for (auto [N, a, b, n] :
         {std::array<long, 4>{5, 1, 2, 1}, std::array<long, 4>{6, 1, 2, 1}}) {
      GaussTypeData g = gauss_type_data(N, a, b, n, 1);
      for (Rational t : {make_rational(1, 3), make_rational(1, 2)}) {
        Ball r = euler_integral_check(g, t, 64);
        ok = ok && r.contains_zero() && r.rad_double() < 1e-15;
      }
    }
    return ok;
  });

  criterion(8, "hodge table, delta decomposition, tate = bracketing", [] {
    bool ok = hodge_triple(2) == HodgeTriple{1, 1, 0} &&
              hodge_triple(1) == HodgeTriple{0, 2, 0} &&
              hodge_triple(0) == HodgeTriple{0, 1, 1};
    hyperlog::testing::RationalGen gen(2028);
    int done = 0;
    while (done < 10000) {
      HodgeInput h{gen.next_non_integer(), gen.next(), gen.next()};
      if (is_integer(h.beta1 - h.mu) || is_integer(h.beta2 - h.mu)) continue;
      auto deltas = d_chi_deltas(h);
      int d = d_chi(h);
      ok = ok && (deltas[0] == 0 || deltas[0] == 1);
      ok = ok && (deltas[1] == 0 || deltas[1] == 1);
      ok = ok && d == deltas[0] + deltas[1] && d >= 0 && d <= 2;
      ++done;
    }
    int shared = 0;
    while (shared < 300) {
      HGParams p = random_admissible(gen);
      bool eq1_all = true;
      for (const UnitClass& s : unit_classes(p.joint_modulus()))
        eq1_all = eq1_all && eq1_holds_at(p, s);
      ok = ok && tate_check(HodgeInput{p.q, p.a, p.b}) == eq1_all;
      ++shared;
    }
    return ok;
  });

  criterion(9, "canonical residues in [0,1) for 50 random exponent pairs",
            [] {
              hyperlog::testing::RationalGen gen(2029);
              bool ok = true;
              int done = 0;
              while (done < 50) {
                Rational b1 = gen.next_unit_interval();
                Rational b2 = gen.next_unit_interval();
                for (int point : {0, 1}) {
                  Eigenvalues ev = residue_eigenvalues_in_frame(b1, b2, point);
                  ok = ok && ev.in_unit_interval;
                }
                ++done;
              }
              return ok;
            });

  criterion(10, "2F1(1,1;2;1/2) contains 2 ln 2; finer balls nest", [] {
    bool ok = true;
    Ball prev(32);
    bool have_prev = false;
    for (mpfr_prec_t prec : {64, 128, 256}) {
      Ball f = pfq({Rational(1), Rational(1)}, {Rational(2)},
                   make_rational(1, 2), prec);
      Ball oracle = Ball::from_long(2, prec + 64).log().mul_q(Rational(2));
      ok = ok && f.contains_ball(oracle);
      if (have_prev) ok = ok && prev.contains_ball(f.round_to(prev.precision()));
      prev = f;
      have_prev = true;
    }
    return ok;
  });

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
