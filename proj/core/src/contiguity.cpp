#include "hyperlog/contiguity.hpp"

#include <algorithm>
#include <numeric>

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

Rational nth(long n) { return Rational(n); }

void require_3f2(const SeriesSpec& spec) {
  if (spec.upper.size() != 3 || spec.lower.size() != 2)
    throw precondition_error("contiguity: operators act on 3F2 series");
}

bool same_multiset(std::vector<Rational> a, std::vector<Rational> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

TruncatedSeries series_expand(const SeriesSpec& spec) {
  spec.validate();
  TruncatedSeries s;
  s.spec = spec;
  s.coeffs.reserve(spec.order + 1);
  Rational c = 1;
  s.coeffs.push_back(c);
  for (unsigned n = 0; n < spec.order; ++n) {
    Rational step = 1;
    for (const Rational& a : spec.upper) step *= a + nth(n);
    for (const Rational& b : spec.lower) step /= b + nth(n);
    step /= nth(n + 1);
    c *= step;
    s.coeffs.push_back(c);
  }
  return s;
}

const char* op_kind_str(OpKind k) {
  switch (k) {
    case OpKind::LowerB:
      return "LowerB";
    case OpKind::RaiseA:
      return "RaiseA";
    case OpKind::RaiseB:
      return "RaiseB";
    case OpKind::LowerA:
      return "LowerA";
  }
  return "?";
}

Rational ContiguityOp::prefactor() const {
  const Rational &a1 = upper[0], &a2 = upper[1], &a3 = upper[2];
  const Rational &b1 = lower[0], &b2 = lower[1];
  switch (kind) {
    case OpKind::LowerB:
      return b1 - 1;
    case OpKind::RaiseA:
      return a1;
    case OpKind::RaiseB:
      return (a2 - b1) * (a1 - b1) * (a3 - b1);
    case OpKind::LowerA:
      return (a1 - b1) * (a1 - b2);
  }
  return Rational(0);
}

std::array<Rational, 3> ContiguityOp::shifted_upper() const {
  auto u = upper;
  if (kind == OpKind::RaiseA) u[0] += 1;
  if (kind == OpKind::LowerA) u[0] -= 1;
  return u;
}

std::array<Rational, 2> ContiguityOp::shifted_lower() const {
  auto l = lower;
  if (kind == OpKind::LowerB) l[0] -= 1;
  if (kind == OpKind::RaiseB) l[0] += 1;
  return l;
}

TruncatedSeries apply_op(const ContiguityOp& op, const TruncatedSeries& s) {
  require_3f2(s.spec);
  if (!same_multiset({op.upper.begin(), op.upper.end()}, s.spec.upper) ||
      !same_multiset({op.lower.begin(), op.lower.end()}, s.spec.lower))
    throw precondition_error(
        "apply_op: operator parameter snapshot does not match the series");

  const Rational pref = op.prefactor();
  if (pref == 0)
    throw zero_prefactor_error(std::string("apply_op: zero prefactor for ") +
                               op_kind_str(op.kind));

  const bool second_order =
      op.kind == OpKind::RaiseB || op.kind == OpKind::LowerA;
  const unsigned m_in = s.spec.order;
  if (second_order && m_in < 3)
    throw order_error("apply_op: theta operators need order >= 3");
  const unsigned m_out = second_order ? m_in - 2 : m_in;

  const Rational &a1 = op.upper[0], &a2 = op.upper[1], &a3 = op.upper[2];
  const Rational &b1 = op.lower[0], &b2 = op.lower[1];
  const auto& c = s.coeffs;

  std::vector<Rational> out(m_out + 1);
  switch (op.kind) {
    case OpKind::LowerB:
      for (unsigned n = 0; n <= m_out; ++n)
        out[n] = (b1 - 1 + nth(n)) * c[n] / pref;
      break;
    case OpKind::RaiseA:
      for (unsigned n = 0; n <= m_out; ++n)
        out[n] = (a1 + nth(n)) * c[n] / pref;
      break;
    case OpKind::RaiseB:
      for (unsigned n = 0; n <= m_out; ++n) {
        Rational nn = nth(n);
        Rational diag = -a1 * a2 * a3 + pref +
                        b1 * nn * (b1 - a1 - a2 - a3 - 1) -
                        b1 * nn * (nn - 1);
        out[n] = (diag * c[n] + b1 * (nn + 1) * (b2 + nn) * c[n + 1]) / pref;
      }
      break;
    case OpKind::LowerA:
      for (unsigned n = 0; n <= m_out; ++n) {
        Rational nn = nth(n);
        Rational diag = pref + (b1 + b2 - a1) * nn + nn * (nn - 1);
        Rational sub =
            n == 0 ? Rational(0)
                   : (a2 + nn - 1) * (a3 + nn - 1) * c[n - 1];
        out[n] = (diag * c[n] - sub) / pref;
      }
      break;
  }

  TruncatedSeries r;
  auto su = op.shifted_upper();
  auto sl = op.shifted_lower();
  r.spec.upper.assign(su.begin(), su.end());
  r.spec.lower.assign(sl.begin(), sl.end());
  r.spec.order = m_out;
  r.spec.validate();
  r.coeffs = std::move(out);
  return r;
}

unsigned ShiftPlan::theta_count() const {
  unsigned k = 0;
  for (const auto& op : ops)
    if (op.kind == OpKind::RaiseB || op.kind == OpKind::LowerA) ++k;
  return k;
}

namespace {

struct State {
  std::array<Rational, 3> upper;
  std::array<Rational, 2> lower;
};

// One unit step on the given slot; rotates the target into position a1/b1
// before recording the op.  Returns false on zero prefactor or an
// inadmissible intermediate series.
bool push_step(std::vector<ContiguityOp>& ops, State& st, int slot_group,
               bool raise) {
  ContiguityOp op;
  if (slot_group < 3) {
    op.kind = raise ? OpKind::RaiseA : OpKind::LowerA;
    op.upper = {st.upper[static_cast<size_t>(slot_group)],
                st.upper[(slot_group + 1) % 3], st.upper[(slot_group + 2) % 3]};
    op.lower = st.lower;
  } else {
    int j = slot_group - 3;
    op.kind = raise ? OpKind::RaiseB : OpKind::LowerB;
    op.upper = st.upper;
    op.lower = {st.lower[static_cast<size_t>(j)],
                st.lower[static_cast<size_t>(1 - j)]};
  }
  if (op.prefactor() == 0) return false;
  auto sl = op.shifted_lower();
  for (const Rational& b : sl)
    if (is_integer(b) && b <= 0) return false;

  if (slot_group < 3)
    st.upper[static_cast<size_t>(slot_group)] += raise ? 1 : -1;
  else
    st.lower[static_cast<size_t>(slot_group - 3)] += raise ? 1 : -1;
  ops.push_back(std::move(op));
  return true;
}

}  // namespace

ShiftPlan plan_shift(const HGParams& base, long n1, long n2, long n3, long n4,
                     long n5) {
  if (n1 < 1 || n2 < 1)
    throw domain_error("plan_shift: unit indices must stay positive");
  for (const Rational& b : {base.a, base.b})
    if (is_integer(b) && b <= 0)
      throw domain_error("plan_shift: base lower parameter in Z<=0");

  // task groups: (slot, delta); slots 0,1 unit indices, 2 the q slot,
  // 3,4 the lower slots.  Default order: q, then a, then b, then units.
  struct Task {
    int slot;
    long delta;
  };
  const std::array<Task, 5> base_tasks = {Task{2, n3}, Task{3, n4},
                                          Task{4, n5}, Task{0, n1 - 1},
                                          Task{1, n2 - 1}};

  std::array<int, 5> perm = {0, 1, 2, 3, 4};
  do {
    State st{{Rational(1), Rational(1), base.q}, {base.a, base.b}};
    std::vector<ContiguityOp> ops;
    bool ok = true;
    for (int idx : perm) {
      const Task& task = base_tasks[static_cast<size_t>(idx)];
      bool raise = task.delta > 0;
      for (long k = 0; ok && k < std::labs(task.delta); ++k)
        ok = push_step(ops, st, task.slot, raise);
      if (!ok) break;
    }
    if (ok) {
      ShiftPlan plan;
      plan.ops = std::move(ops);
      plan.base = base;
      return plan;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw plan_error("plan_shift: no operator ordering with nonzero prefactors");
}

TruncatedSeries ShiftPlan::execute(unsigned target_order) const {
  SeriesSpec spec;
  spec.upper = {Rational(1), Rational(1), base.q};
  spec.lower = {base.a, base.b};
  spec.order = required_order(target_order);
  TruncatedSeries s = series_expand(spec);
  for (const auto& op : ops) s = apply_op(op, s);
  if (s.spec.order > target_order) {
    s.spec.order = target_order;
    s.coeffs.resize(target_order + 1);
  }
  return s;
}

Ball verify_contiguity(OpKind kind, const std::array<Rational, 3>& upper,
                       const std::array<Rational, 2>& lower, const Rational& x,
                       mpfr_prec_t prec) {
  if (x <= 0 || x >= 1)
    throw domain_error("verify_contiguity: need x in (0,1)");
  ContiguityOp op{kind, upper, lower};
  const Rational pref = op.prefactor();
  if (pref == 0)
    throw zero_prefactor_error("verify_contiguity: zero prefactor");

  const mpfr_prec_t wp = prec + 32;
  const std::vector<Rational> up(upper.begin(), upper.end());
  const std::vector<Rational> lo(lower.begin(), lower.end());
  auto su = op.shifted_upper();
  auto sl = op.shifted_lower();
  const std::vector<Rational> up_s(su.begin(), su.end());
  const std::vector<Rational> lo_s(sl.begin(), sl.end());
  for (const Rational& b : lo_s)
    if (is_integer(b) && b <= 0)
      throw domain_error("verify_contiguity: shifted lower parameter bad");

  Ball lhs = pfq(up_s, lo_s, x, wp).mul_q(pref);

  Ball f = pfq(up, lo, x, wp);
  Ball fp = pfq_derivative(up, lo, x, wp);  // F'
  const Rational &a1 = upper[0], &a2 = upper[1], &a3 = upper[2];
  const Rational &b1 = lower[0], &b2 = lower[1];

  Ball rhs(wp);
  switch (kind) {
    case OpKind::LowerB:
      rhs = f.mul_q(b1 - 1) + fp.mul_q(x);
      break;
    case OpKind::RaiseA:
      rhs = f.mul_q(a1) + fp.mul_q(x);
      break;
    case OpKind::RaiseB: {
      // theta1 = -a1a2a3 + pref + b1(b2 + (b1-a1-a2-a3-1)x) d/dx
      //          + b1(x - x^2) d^2/dx^2
      Rational d2f_factor = 1;
      std::vector<Rational> up2, lo2;
      for (const Rational& a : up) {
        d2f_factor *= a * (a + 1);
        up2.push_back(a + 2);
      }
      for (const Rational& b : lo) {
        d2f_factor /= b * (b + 1);
        lo2.push_back(b + 2);
      }
      Ball fpp = pfq(up2, lo2, x, wp).mul_q(d2f_factor);
      rhs = f.mul_q(-a1 * a2 * a3 + pref) +
            fp.mul_q(b1 * (b2 + (b1 - a1 - a2 - a3 - 1) * x)) +
            fpp.mul_q(b1 * (x - x * x));
      break;
    }
    case OpKind::LowerA: {
      Rational d2f_factor = 1;
      std::vector<Rational> up2, lo2;
      for (const Rational& a : up) {
        d2f_factor *= a * (a + 1);
        up2.push_back(a + 2);
      }
      for (const Rational& b : lo) {
        d2f_factor /= b * (b + 1);
        lo2.push_back(b + 2);
      }
      Ball fpp = pfq(up2, lo2, x, wp).mul_q(d2f_factor);
      rhs = f.mul_q(pref - a2 * a3 * x) +
            fp.mul_q((b1 + b2 - a1) * x - (a2 + a3 + 1) * x * x) +
            fpp.mul_q(x * x - x * x * x);
      break;
    }
  }
  return (lhs - rhs).round_to(prec);
}

}  // namespace hyperlog
