#pragma once

#include <array>

#include "hyperlog/rational.hpp"

namespace hyperlog {

// Character data of a fibration of Gauss type
//   y^N = x^a (1-x)^b (1-tx)^{N-b},  0 < a,b < N,  gcd(N,a,b) = 1,
// for the character sending the generating root of unity to zeta^{-n}.
// d is the kernel size of the multiplication projection; the Gauss-type
// condition requires ad and bd to be nonzero mod N.
struct GaussTypeData {
  Integer N;
  Integer a, b;
  Integer n;       // gcd(n,N)=1
  Integer d;       // divides N
  Integer d1, d2;  // gcd(N,a), gcd(N,b)
  Integer a_n, b_n, c_n;
  Rational alpha_n, beta_n;  // {-an/N}, {-bn/N}, both in (0,1)
};

// Throws precondition_error on malformed input, or the NotGaussType
// condition (ad or bd = 0 mod N).
GaussTypeData gauss_type_data(const Integer& N, const Integer& a,
                              const Integer& b, const Integer& n,
                              const Integer& d);

// Inputs of the Hodge-number formula: mu = k/l and the two local exponents
// at infinity; none of mu, beta_i - mu may be an integer.
struct HodgeInput {
  Rational mu;
  Rational beta1, beta2;
};

struct HodgeTriple {
  int h20, h11, h02;
  friend bool operator==(const HodgeTriple&, const HodgeTriple&) = default;
};

// d = 2{-mu} + sum_i ({beta_i} - {beta_i - mu}), always in {0,1,2}; it
// splits as delta_1 + delta_2 with delta_i = {beta_i}+{-mu}-{beta_i-mu}.
int d_chi(const HodgeInput& h);
std::array<int, 2> d_chi_deltas(const HodgeInput& h);

// 2 -> (1,1,0), 1 -> (0,2,0), 0 -> (0,1,1)
HodgeTriple hodge_triple(int d);

// True iff d_chi = 1 for every unit class of the joint modulus, i.e. the
// weight-2 part is Tate of type (1,1); equivalently {s beta_1}, {s beta_2}
// strictly bracket {s mu} at every s.
bool tate_check(const HodgeInput& h);

// Local exponents of the rank-2 hypergeometric connection attached to a
// Gauss-type character: 0, 1-alpha-beta at t=0; 0,0 at t=1; alpha, beta at
// t=infinity.  The six exponents sum to 1.
struct RiemannScheme {
  std::array<Rational, 2> at_zero;
  std::array<Rational, 2> at_one;
  std::array<Rational, 2> at_infinity;

  static RiemannScheme from_exponents(const Rational& alpha,
                                      const Rational& beta);
  Rational exponent_sum() const;
};

}  // namespace hyperlog
