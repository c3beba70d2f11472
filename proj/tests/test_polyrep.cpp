#include <doctest.h>

#include "fusion_sos/error.hpp"
#include "fusion_sos/fusion.hpp"
#include "fusion_sos/polyrep.hpp"
#include "support.hpp"

using namespace fusion_sos;
using fusion_sos::testing::Gen;
using fusion_sos::testing::delta_pointwise;

namespace {

ModelParams params_for(const Scalar& alpha) {
  return ModelParams::from_w(alpha, rational(1, 2), rational(1, 7));
}

}  // namespace

TEST_CASE("delta operators match pointwise shifts") {
  Gen g(41);
  for (const Scalar& alpha : {Scalar(1), rational(5, 3), rational(-2, 7)}) {
    ModelParams p = params_for(alpha);
    for (int d = 0; d <= 6; ++d) {
      Polynomial f = g.polynomial(d);
      CHECK(delta_op(+1, d, p).apply(f) == delta_pointwise(f, +1, alpha));
      CHECK(delta_op(-1, d, p).apply(f) == delta_pointwise(f, -1, alpha));
      CHECK(delta_op(-1, d, p).out_degree == std::max(d - 1, 0));
    }
  }
}

TEST_CASE("operator algebra: multiply, compose, add, scale") {
  Gen g(42);
  ModelParams p = params_for(rational(5, 3));
  Polynomial q = g.polynomial(2), f = g.polynomial(4);
  DiffOp mul = multiply_op(q, 4);
  CHECK(mul.apply(f) == testing::schoolbook_poly_mul(q, f));
  DiffOp dm = delta_op(-1, 6, p);
  CHECK(compose(dm, mul).apply(f) == delta_pointwise(q * f, -1, p.alpha));
  CHECK(add(identity_op(4), scale(identity_op(4), 2)).apply(f) == f * Scalar(3));
  CHECK(delta_power(-1, 3, 6, p).apply(g.polynomial(6)).degree() <= 3);
  CHECK_THROWS_AS(compose(identity_op(2), identity_op(5)), MathError);
  try {
    truncate(multiply_op(Polynomial{0, 1}, 3), 3);
    FAIL("expected throw");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::LossyTruncation);
  }
}

TEST_CASE("gamma polynomial roots") {
  ModelParams p = params_for(rational(5, 3));
  for (int k = 1; k <= 4; ++k) {
    Scalar shift = rational(2, 5);
    GammaFactor gf = gamma_poly(k, shift, p);
    CHECK(gf.poly.degree() == k);
    for (int j = 0; j < k; ++j) CHECK(gf.poly.evaluate(shift - p.alpha * (2 * j + 1 - k)) == 0);
    CHECK_FALSE(gf.reciprocal());
    CHECK(gamma_poly(-k, shift, p).reciprocal());
  }
  CHECK(gamma_poly(0, 1, p).poly == Polynomial::constant(1));
}

TEST_CASE("star-triangle relation and gamma commutation") {
  for (const Scalar& alpha : {Scalar(1), rational(-2, 7)}) {
    ModelParams p = params_for(alpha);
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l) CHECK(star_triangle_check(k, l, rational(2, 5), 6, p));
    for (int q = 1; q <= 3; ++q) CHECK(gamma_commutation_check(q, 6, p));
  }
}

TEST_CASE("symmetric coordinates and polynomials are inverse") {
  Gen g(43);
  for (int n = 1; n <= 5; ++n) {
    CHECK(sym_to_poly_matrix(n) * poly_to_sym_matrix(n) == Matrix::identity(n + 1));
    Polynomial f = g.polynomial(n);
    CHECK(sym_coords_to_poly(poly_to_sym_coords(f, n)) == f);
  }
  // Coordinate k carries (-z)^(n-k).
  Matrix e(3, 1);
  e(0, 0) = 1;
  CHECK(sym_coords_to_poly(e) == Polynomial::monomial(2));
}

TEST_CASE("r_n1_matrix entries act as the stated difference operators") {
  Gen g(44);
  ModelParams p = params_for(rational(5, 3));
  const Scalar& a = p.alpha;
  for (int n = 1; n <= 4; ++n) {
    Scalar u = g.rational();
    auto r = r_n1_matrix(n, u, p);
    Polynomial f = g.polynomial(n), z{0, 1};
    Polynomial dp = delta_pointwise(f, +1, a), dm = delta_pointwise(f, -1, a);
    CHECK(r[0][0].apply(f) == dp * u + z * dm * (1 / a));
    CHECK(r[0][1].apply(f) == dm * (-1 / a));
    CHECK(r[1][0].apply(f) == z * z * dm * (1 / a) - z * dp * Scalar(n) - dm * (a * u * (u + n)));
    CHECK(r[1][1].apply(f) == dp * (u + n) - z * dm * (1 / a));
  }
}

TEST_CASE("polynomial representation agrees with the fused operator") {
  Gen g(45);
  ModelParams p = params_for(rational(-2, 7));
  for (int n = 1; n <= 3; ++n) {
    Scalar u = g.rational();
    CHECK(r_n1_symmetric(n, u, p) == fuse_n1(n, u, p));
  }
}

TEST_CASE("O_m: product form, gamma form and the direct route agree") {
  for (const Scalar& alpha : {Scalar(1), rational(5, 3)}) {
    ModelParams p = params_for(alpha);
    for (int m = 1; m <= 3; ++m)
      for (long b = -1; b <= 1; ++b)
        for (long c = b - m; c <= b + m; c += 2)
          for (long u = 0; u <= m; ++u) {
            const int degree = m + 2;
            DiffOp prod = o_m_product_form(m, u, b, c, p, degree);
            CHECK(prod == o_m_gamma_form(m, u, b, c, p, degree));
            CHECK(prod.matrix == testing::o_m_third_route(m, u, b, c, p, degree));
          }
  }
}

TEST_CASE("O_m single-factor case") {
  // b = c + 1: O_1 = -α⁻¹{[α(-u+c+1+s) - z]Δ₋ - αuΔ₊}.
  Gen g(46);
  ModelParams p = params_for(rational(5, 3));
  const Scalar& a = p.alpha;
  long c = 1, b = 2;
  Scalar u = g.rational();
  Polynomial f = g.polynomial(3), z{0, 1};
  Polynomial expected = (Polynomial::constant(a * (-u + c + 1 + p.s)) - z) * delta_pointwise(f, -1, a) -
                        delta_pointwise(f, +1, a) * (a * u);
  CHECK(o_m_product_form(1, u, b, c, p, 3).apply(f) == expected * (-1 / a));
}

TEST_CASE("O_m error reporting") {
  ModelParams p = params_for(1);
  try {
    o_m_product_form(2, 1, 0, 1, p, 3);
    FAIL("expected throw");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::AdjacencyViolation);
  }
  try {
    o_m_gamma_form(1, rational(1, 2), 0, 1, p, 3);
    FAIL("expected throw");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedEvaluationPoint);
  }
}
