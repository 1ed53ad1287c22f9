#pragma once

#include <utility>

#include "hyperlog/rational.hpp"
#include "hyperlog/rational_function.hpp"

namespace hyperlog {

// Connection matrix of the rank-2 bundle in the frame (omega_n, eta_n):
//   nabla(omega, eta) = dt (x) (omega, eta) M,
//   M = [[0, beta2/t], [beta1/(1-t), -(beta1+beta2)/t]].
Mat2 connection_matrix(const Rational& beta1, const Rational& beta2);

// Change of basis G from (omega_n, eta_n) to the local frame of the
// canonical extension.  At t=0 the frame depends on whether beta1+beta2
// exceeds 1; at t=1 it is the identity.  beta_i must lie in (0,1).
Mat2 canonical_frame(const Rational& beta1, const Rational& beta2, int point);

// Connection matrix after the change of basis G: G^-1 (M G + G').
Mat2 transformed_connection(const Mat2& m, const Mat2& g);

// Residue of a connection matrix with at most simple poles at the point:
// entries of (t - point) * M evaluated at the point.  Entries are exact
// rationals; throws pole_error on a higher-order pole.
struct ResidueMatrix {
  Rational a, b, c, d;
  Rational trace() const { return a + d; }
  Rational det() const { return a * d - b * c; }
};
ResidueMatrix residue_at(const Mat2& m, const Rational& point);

// Eigenvalues of a 2x2 exact rational matrix.  When the characteristic
// polynomial splits over Q the two roots are reported; otherwise the trace
// and determinant are reported and the unit-interval check is carried out
// on the characteristic polynomial directly.
struct Eigenvalues {
  bool rational_pair;
  Rational first, second;  // roots when rational_pair
  Rational trace, det;
  bool in_unit_interval;  // both eigenvalues real and in [0,1)
};
Eigenvalues eigenvalues(const ResidueMatrix& m);

// Residue eigenvalues of the connection in the canonical-extension frame at
// the given point (0 or 1); canonical extension means these lie in [0,1).
Eigenvalues residue_eigenvalues_in_frame(const Rational& beta1,
                                         const Rational& beta2, int point);

}  // namespace hyperlog
