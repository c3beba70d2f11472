#include "fusion_sos/fusion.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <vector>

#include "fusion_sos/error.hpp"
#include "fusion_sos/polynomial.hpp"

namespace fusion_sos {

namespace {

std::vector<std::size_t> range_sites(std::size_t first, std::size_t count) {
  std::vector<std::size_t> s(count);
  std::iota(s.begin(), s.end(), first);
  return s;
}

}  // namespace

SymBasis sym_basis(int n) {
  const std::size_t dim = std::size_t{1} << n;
  SymBasis b;
  b.n = n;
  b.embed = Matrix(dim, n + 1);
  b.project = Matrix(n + 1, dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    int k = std::popcount(idx);
    b.embed(idx, k) = 1 / binomial(n, k);
    b.project(k, idx) = 1;
  }
  return b;
}

Matrix symmetrizer(int n) {
  const std::size_t dim = std::size_t{1} << n;
  Matrix sum(dim, dim);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    // Factor i of the input lands in factor perm[i] of the output.
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t row = 0;
      for (int i = 0; i < n; ++i) {
        std::size_t bit = (col >> (n - 1 - i)) & 1u;
        row |= bit << (n - 1 - perm[i]);
      }
      sum(row, col) += 1;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum * rational(1, static_cast<long>(count));
}

Matrix fused_full_operator(int n, int m, const Scalar& u, const ModelParams& params) {
  const std::vector<std::size_t> dims(n + m, 2);
  const std::size_t total = std::size_t{1} << (n + m);
  Matrix pin = Matrix::identity(total);
  if (n > 1) pin = embed_operator(symmetrizer(n), dims, range_sites(0, n));

  Matrix result = Matrix::identity(total);
  for (int j = m; j >= 1; --j) {
    const Scalar uj = u - (m - j);
    const std::size_t jbar = n + j - 1;
    Matrix row = pin;
    for (int i = 1; i <= n; ++i) {
      const std::array<std::size_t, 2> sites{static_cast<std::size_t>(i - 1), jbar};
      row = row * embed_operator(r7v(uj + (n - i), params), dims, sites);
    }
    result = result * row;
  }
  if (m > 1) result = embed_operator(symmetrizer(m), dims, range_sites(n, m)) * result;
  return result;
}

Matrix fused_product_nm(int n, int m, const Scalar& u, const ModelParams& params) {
  SymBasis bn = sym_basis(n), bm = sym_basis(m);
  return kron(bn.project, bm.project) * fused_full_operator(n, m, u, params) *
         kron(bn.embed, bm.embed);
}

Scalar fusion_scalar(int n, int m, const Scalar& u) {
  Scalar rho = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j < n; ++j) rho *= u - i + j;
  }
  return rho;
}

Matrix fuse_nm(int n, int m, const Scalar& u, const ModelParams& params) {
  Scalar rho = fusion_scalar(n, m, u);
  if (rho != 0) return fused_product_nm(n, m, u, params) * Scalar(1 / rho);

  // Each entry of the normalized operator is a polynomial in u of degree at
  // most 2nm; sample at half-integer offsets, where the scalar never vanishes.
  const int samples = 2 * n * m + 1;
  std::vector<Scalar> xs;
  std::vector<Matrix> values;
  for (int k = 0; k < samples; ++k) {
    Scalar x = u + k + rational(1, 2);
    xs.push_back(x);
    values.push_back(fused_product_nm(n, m, x, params) * Scalar(1 / fusion_scalar(n, m, x)));
  }
  const std::size_t dim = values.front().rows();
  Matrix out(dim, dim);
  std::vector<Scalar> ys(samples);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (int k = 0; k < samples; ++k) ys[k] = values[k](i, j);
      out(i, j) = lagrange_interpolate(xs, ys).evaluate(u);
    }
  }
  return out;
}

Matrix fusion_image_residual(int n, int m, const Scalar& u, const ModelParams& params) {
  const std::size_t total = std::size_t{1} << (n + m);
  Matrix sym = kron(symmetrizer(n), symmetrizer(m));
  return (Matrix::identity(total) - sym) * fused_full_operator(n, m, u, params) * sym;
}

}  // namespace fusion_sos
