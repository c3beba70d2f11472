#include <doctest.h>

#include "fusion_sos/error.hpp"
#include "fusion_sos/vertex.hpp"
#include "support.hpp"

using namespace fusion_sos;
using fusion_sos::testing::Gen;

namespace {

Matrix swap_oracle(std::size_t d) {
  Matrix p(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix ei(d, 1), ej(d, 1);
      ei(i, 0) = 1;
      ej(j, 0) = 1;
      // P(e_i ⊗ e_j) = e_j ⊗ e_i
      Matrix dst = testing::kron_loop(ej, ei);
      for (std::size_t r = 0; r < d * d; ++r)
        if (dst(r, 0) != 0) p(r, i * d + j) = 1;
    }
  return p;
}

}  // namespace

TEST_CASE("r7v entries") {
  ModelParams p;
  p.alpha = rational(5, 3);
  Scalar u = rational(2, 7);
  Matrix r = r7v(u, p);
  CHECK(r(0, 0) == u + 1);
  CHECK(r(1, 1) == u);
  CHECK(r(1, 2) == 1);
  CHECK(r(3, 0) == p.alpha * p.alpha * u * (u + 1));
  CHECK(r(3, 3) == u + 1);
  CHECK(r(0, 3) == 0);
}

TEST_CASE("permutation operator swaps factors") {
  for (std::size_t d = 2; d <= 4; ++d) {
    CHECK(permutation_op(d) == swap_oracle(d));
    CHECK(permutation_op(d) * permutation_op(d) == Matrix::identity(d * d));
  }
}

TEST_CASE("degeneracy at u = -1") {
  for (const Scalar& alpha : {Scalar(1), rational(5, 3), rational(-2, 7)}) {
    ModelParams p;
    p.alpha = alpha;
    CHECK(check_degeneracy(p) == -1);
    CHECK(r7v(-1, p) == Scalar(-1) * (Matrix::identity(4) - permutation_op(2)));
  }
}

TEST_CASE("unitarity-type relation r(u) r(-u) is scalar") {
  Gen g(21);
  ModelParams p;
  p.alpha = rational(-2, 7);
  for (int i = 0; i < 10; ++i) {
    Scalar u = g.rational();
    Matrix prod = permutation_op(2) * r7v(u, p) * permutation_op(2) * r7v(-u, p);
    CHECK(prod == Matrix::identity(4) * ((1 + u) * (1 - u)));
  }
}

TEST_CASE("embed_operator agrees with Kronecker placement") {
  Gen g(22);
  Matrix op = g.matrix(4, 4), a = g.matrix(3, 3);
  std::vector<std::size_t> dims{2, 2, 3};
  std::vector<std::size_t> s01{0, 1};
  CHECK(embed_operator(op, dims, s01) == testing::kron_loop(op, Matrix::identity(3)));
  // Sites (1, 0) conjugate by the swap.
  std::vector<std::size_t> d2{2, 2}, s10{1, 0};
  CHECK(embed_operator(op, d2, s10) == permutation_op(2) * op * permutation_op(2));
  std::vector<std::size_t> s2{2};
  CHECK(embed_operator(a, dims, s2) == testing::kron_loop(Matrix::identity(4), a));
}

TEST_CASE("seven-vertex Yang-Baxter property") {
  Gen g(23);
  for (const Scalar& alpha : {Scalar(1), rational(5, 3), rational(-2, 7)}) {
    ModelParams p;
    p.alpha = alpha;
    for (int i = 0; i < 8; ++i) {
      Scalar u = g.rational(), v = g.rational();
      std::vector<std::size_t> dims{2, 2, 2}, s12{0, 1}, s13{0, 2}, s23{1, 2};
      CHECK(check_ybe_vertex(embed_operator(r7v(v, p), dims, s12), embed_operator(r7v(u, p), dims, s13),
                             embed_operator(r7v(u - v, p), dims, s23), {2, 2, 2}));
      CHECK(check_ybe_vertex_local(r7v(v, p), r7v(u, p), r7v(u - v, p), {2, 2, 2}));
    }
    // A wrong spectral assignment must fail.
    CHECK_FALSE(check_ybe_vertex_local(r7v(2, p), r7v(3, p), r7v(5, p), {2, 2, 2}));
  }
}

TEST_CASE("model parameter validation") {
  ModelParams p;
  p.alpha = 0;
  CHECK_THROWS(validate(p));
  ModelParams q = ModelParams::from_w(1, rational(1, 2), rational(1, 10));
  CHECK(q.w() == rational(1, 2));
  CHECK(q.s - q.t == rational(1, 5));
}
