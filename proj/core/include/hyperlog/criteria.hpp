#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlog/rational.hpp"

namespace hyperlog {

// Parameter triple of 3F2(1,1,q; a,b; x).  The classification criteria need
// none of q, a, b, q-a, q-b, q-a-b to be an integer; violating triples are
// representable and get flagged instead of rejected.
struct HGParams {
  Rational q, a, b;

  // lcm of the denominators of q, a, b; every fractional-part expression in
  // the criteria factors through (Z/NZ)^x for this N.
  Integer joint_modulus() const;

  friend bool operator==(const HGParams& x, const HGParams& y) {
    return x.q == y.q && x.a == y.a && x.b == y.b;
  }
};

enum class Label { FailsPreconditions, LogFunctional, LogAtOneOnly, None };

const char* label_str(Label l);
std::optional<Label> label_from_str(std::string_view s);

struct ClassificationRecord {
  HGParams params;
  Integer modulus = 1;
  // keyed by residue; empty when preconditions fail
  std::map<Integer, bool> eq1_per_class;
  std::map<Integer, bool> eq2_per_class;
  bool bh_algebraic = false;
  bool converges_at_1 = false;  // a + b > q + 2, kept separate from the label
  Label label = Label::None;

  // One JSON object, single line, stable key order.
  std::string to_json() const;
  static ClassificationRecord from_json(const std::string& line);

  friend bool operator==(const ClassificationRecord&,
                         const ClassificationRecord&) = default;
};

// Names of the violated Theorem-2.1 integrality constraints, e.g. "q-a".
std::vector<std::string> check_preconditions(const HGParams& p);

// Functional criterion at one unit class: the fractional-part sum form
//   1 = {sa} + {sb} + 2{-sq} - {s(a-q)} - {s(b-q)}
// which must agree with strict bracketing of {sq} by {sa}, {sb}.  Both are
// computed; disagreement or a tie throws internal_error.
bool eq1_holds_at(const HGParams& p, const UnitClass& s);

// Value-at-1 criterion at one unit class:
//   2 = {sq} + {s(a-q)} + {s(b-q)} + {s(q-a-b)}
bool eq2_holds_at(const HGParams& p, const UnitClass& s);

ClassificationRecord classify(const HGParams& p);

// Parameters of a pFp-1 for the algebraicity interlacing test.
struct BHInput {
  std::vector<Rational> upper;  // a_1..a_p
  std::vector<Rational> lower;  // b_1..b_{p-1}
};

// True iff ({s a_1},...,{s a_p}) and (0,{s b_1},...,{s b_{p-1}}) strictly
// interlace for every unit class s of the joint modulus.  Repeated values
// make strict interlacing impossible and yield false.
bool bh_algebraic(const BHInput& input);

}  // namespace hyperlog
