#include "hyperlog/gauss_manin.hpp"

#include "hyperlog/errors.hpp"

namespace hyperlog {

namespace {

RationalFunction rf_const(const Rational& c) { return RationalFunction(c); }

RationalFunction rf_t() { return RationalFunction::variable(); }

void check_betas(const Rational& beta1, const Rational& beta2) {
  if (is_integer(beta1) || is_integer(beta2))
    throw precondition_error("connection data: beta_i must not be integers");
}

}  // namespace

Mat2 connection_matrix(const Rational& beta1, const Rational& beta2) {
  check_betas(beta1, beta2);
  RationalFunction t = rf_t();
  RationalFunction one_minus_t = rf_const(1) - t;
  Mat2 m;
  m.a = RationalFunction();
  m.b = rf_const(beta2) / t;
  m.c = rf_const(beta1) / one_minus_t;
  m.d = rf_const(-(beta1 + beta2)) / t;
  return m;
}

Mat2 canonical_frame(const Rational& beta1, const Rational& beta2,
                     int point) {
  check_betas(beta1, beta2);
  if (beta1 <= 0 || beta1 >= 1 || beta2 <= 0 || beta2 >= 1)
    throw precondition_error("canonical_frame: beta_i must lie in (0,1)");
  if (point == 1) return Mat2::identity();
  if (point != 0) throw domain_error("canonical_frame: point must be 0 or 1");

  RationalFunction t = rf_t();
  Rational sum = beta1 + beta2;
  Mat2 g;
  if (sum <= 1) {
    // <omega, t(beta2 omega + (beta1+beta2) eta)>
    g.a = rf_const(1);
    g.b = t * rf_const(beta2);
    g.c = RationalFunction();
    g.d = t * rf_const(sum);
  } else {
    // <t omega, (beta1+beta2-1) omega + t beta1 eta>
    g.a = t;
    g.b = rf_const(sum - 1);
    g.c = RationalFunction();
    g.d = t * rf_const(beta1);
  }
  return g;
}

Mat2 transformed_connection(const Mat2& m, const Mat2& g) {
  return g.inverse() * (m * g + g.derivative());
}

ResidueMatrix residue_at(const Mat2& m, const Rational& point) {
  Poly shift = Poly::from_coeffs({-point, Rational(1)});  // t - point
  auto entry = [&](const RationalFunction& f) {
    RationalFunction scaled = RationalFunction(shift) * f;
    auto v = scaled.eval(point);
    if (!v)
      throw pole_error("residue_at: pole of order > 1 at " +
                       rational_str(point));
    return *v;
  };
  return ResidueMatrix{entry(m.a), entry(m.b), entry(m.c), entry(m.d)};
}

Eigenvalues eigenvalues(const ResidueMatrix& m) {
  Eigenvalues e;
  e.trace = m.trace();
  e.det = m.det();
  Rational disc = e.trace * e.trace - 4 * e.det;

  // char poly: x^2 - T x + D.  Both roots real iff disc >= 0; given that,
  // both in [0,1) iff D >= 0, T >= 0 (roots >= 0) and T < 2, 1 - T + D > 0
  // (roots < 1).
  e.in_unit_interval = disc >= 0 && e.det >= 0 && e.trace >= 0 &&
                       e.trace < 2 && 1 - e.trace + e.det > 0;

  e.rational_pair = false;
  e.first = 0;
  e.second = 0;
  if (disc >= 0) {
    Integer num = disc.get_num(), den = disc.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) &&
        mpz_perfect_square_p(den.get_mpz_t())) {
      Integer sn, sd;
      mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
      Rational root = make_rational(sn, sd);
      e.rational_pair = true;
      e.first = (e.trace - root) / 2;
      e.second = (e.trace + root) / 2;
    }
  }
  return e;
}

Eigenvalues residue_eigenvalues_in_frame(const Rational& beta1,
                                         const Rational& beta2, int point) {
  if (point != 0 && point != 1)
    throw domain_error("residue_eigenvalues_in_frame: point must be 0 or 1");
  Mat2 m = connection_matrix(beta1, beta2);
  Mat2 g = canonical_frame(beta1, beta2, point);
  Mat2 transformed = transformed_connection(m, g);
  return eigenvalues(residue_at(transformed, Rational(point)));
}

}  // namespace hyperlog
