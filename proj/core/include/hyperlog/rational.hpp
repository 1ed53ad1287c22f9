#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlog {

using Integer = mpz_class;

// Exact rational numbers. mpq_class keeps the canonical form we rely on
// everywhere: gcd(num,den)=1, den >= 1, sign on the numerator.
using Rational = mpq_class;

// den must be nonzero; result is canonicalized.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// String form "p/q" or "p" (q omitted when 1), ASCII, no whitespace.
// Accepts unreduced input ("2/4" parses to 1/2); rejects everything else.
std::optional<Rational> parse_rational(std::string_view s);
std::string rational_str(const Rational& q);

bool is_integer(const Rational& q);
Integer floor_int(const Rational& q);

// Fractional part {q} = q - floor(q), in [0,1).
Rational frac(const Rational& q);

// Rising factorial (alpha)_n = alpha (alpha+1) ... (alpha+n-1), (alpha)_0 = 1.
Rational pochhammer(const Rational& alpha, unsigned long n);

Integer denominator_lcm(std::span<const Rational> values);

// A residue s mod N with gcd(s,N)=1. This is the finite avatar through which
// the action of the profinite unit group on rationals with denominator
// dividing N factors.
struct UnitClass {
  Integer modulus;  // N >= 1
  Integer residue;  // s in [1,N) coprime to N; N=1 uses s=1 for the identity

  Rational times(const Rational& q) const { return Rational(residue) * q; }

  friend bool operator==(const UnitClass&, const UnitClass&) = default;
};

// All unit classes mod N in ascending residue order; length is phi(N).
std::vector<UnitClass> unit_classes(const Integer& N);

}  // namespace hyperlog
