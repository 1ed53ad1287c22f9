#pragma once

#include <array>
#include <vector>

#include "hyperlog/ball.hpp"
#include "hyperlog/criteria.hpp"
#include "hyperlog/hyper_eval.hpp"

namespace hyperlog {

// Exact truncated 3F2 series: coefficient n is
// prod (a_i)_n / (prod (b_j)_n n!) for the spec's parameters.
struct TruncatedSeries {
  SeriesSpec spec;
  std::vector<Rational> coeffs;  // length spec.order + 1

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;
};

TruncatedSeries series_expand(const SeriesSpec& spec);

// The four contiguous shifts on 3F2 realized by first- and second-order
// differential operators.  LowerB and RaiseA are first order and preserve
// the truncation order; the theta operators RaiseB and LowerA are second
// order and lose two orders at the tail.
enum class OpKind { LowerB, RaiseA, RaiseB, LowerA };

const char* op_kind_str(OpKind k);

struct ContiguityOp {
  OpKind kind;
  // parameters at application time, target occupying a1 (resp. b1)
  std::array<Rational, 3> upper;
  std::array<Rational, 2> lower;

  // the scalar that divides the operator output; must be nonzero
  Rational prefactor() const;
  // parameters after the shift
  std::array<Rational, 3> shifted_upper() const;
  std::array<Rational, 2> shifted_lower() const;
};

// Applies the operator to an exact truncated series whose parameter multiset
// matches the op's snapshot.  Output order is the input order for the
// first-order ops and input order - 2 for the theta ops.
TruncatedSeries apply_op(const ContiguityOp& op, const TruncatedSeries& s);

// Operator composition carrying 3F2(1,1,q;a,b) to
// 3F2(n1,n2,q+n3; a+n4,b+n5); every intermediate prefactor is nonzero and
// every intermediate series has admissible lower parameters.
struct ShiftPlan {
  HGParams base;
  std::vector<ContiguityOp> ops;

  unsigned theta_count() const;
  // order the input must carry so the output still has `target_order`
  unsigned required_order(unsigned target_order) const {
    return target_order + 2 * theta_count();
  }
  TruncatedSeries execute(unsigned target_order) const;
};

ShiftPlan plan_shift(const HGParams& base, long n1, long n2, long n3, long n4,
                     long n5);

// Residual ball of one contiguity identity, left side minus right side,
// at rational x in (0,1); rigorous, must contain 0.
Ball verify_contiguity(OpKind kind, const std::array<Rational, 3>& upper,
                       const std::array<Rational, 2>& lower, const Rational& x,
                       mpfr_prec_t prec);

}  // namespace hyperlog
