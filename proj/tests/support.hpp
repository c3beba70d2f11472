#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fusion_sos/matrix.hpp"
#include "fusion_sos/polynomial.hpp"
#include "fusion_sos/polyrep.hpp"
#include "fusion_sos/scalar.hpp"
#include "fusion_sos/vertex.hpp"

namespace fusion_sos::testing {

/// Seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Scalar rational(long max_num = 25, long max_den = 9) {
    return fusion_sos::rational(integer(-max_num, max_num), integer(1, max_den));
  }

  /// Nonzero denominator ≥ 2 with odd numerator: avoids integer and
  /// half-integer poles of the fused weights.
  Scalar generic() {
    long den = integer(1, 4) * 2 + 1;
    long num = integer(-40, 40) * 2 + 1;
    return fusion_sos::rational(num * 2, den * 3 + 1);
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational();
    return m;
  }

  Polynomial polynomial(int degree) {
    std::vector<Scalar> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rational());
    return Polynomial(c);
  }

 private:
  std::mt19937_64 rng_;
};

/// Triple-loop product, independent of mat_mul.
inline Matrix schoolbook_mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

/// Four-index Kronecker product.
inline Matrix kron_loop(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

/// Coefficient convolution.
inline Polynomial schoolbook_poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  return Polynomial(c);
}

/// Δ± applied pointwise: ½(f(z+α) ± f(z−α)) via interpolation on degree+1
/// sample points.
inline Polynomial delta_pointwise(const Polynomial& f, int sign, const Scalar& alpha) {
  const int d = std::max(f.degree(), 0);
  std::vector<Scalar> xs, ys;
  for (int k = 0; k <= d; ++k) {
    Scalar z = fusion_sos::rational(3 * k - 2, 7);
    xs.push_back(z);
    ys.push_back((f.evaluate(z + alpha) + Scalar(sign) * f.evaluate(z - alpha)) / 2);
  }
  return lagrange_interpolate(xs, ys);
}

/// Exhaustive periodic vertex lattice sum over all edge states. Vertical edge
/// v(i,j) enters site (i,j) from below, horizontal edge h(i,j) enters from the
/// left. The site weight is R[(v(i,j+1), h(i+1,j)), (v(i,j), h(i,j))].
inline Scalar vertex_partition_bruteforce(const Matrix& r, int q, int aux, int N, int M) {
  const int vcount = N * M, hcount = N * M;
  std::vector<int> v(vcount, 0), h(hcount, 0);
  auto vat = [&](int i, int j) { return v[((j % M + M) % M) * N + ((i % N + N) % N)]; };
  auto hat = [&](int i, int j) { return h[((j % M + M) % M) * N + ((i % N + N) % N)]; };
  Scalar total = 0;
  std::vector<int> all(vcount + hcount, 0);
  while (true) {
    for (int k = 0; k < vcount; ++k) v[k] = all[k];
    for (int k = 0; k < hcount; ++k) h[k] = all[vcount + k];
    Scalar prod = 1;
    for (int j = 0; j < M && prod != 0; ++j)
      for (int i = 0; i < N && prod != 0; ++i)
        prod *= r(vat(i, j + 1) * aux + hat(i + 1, j), vat(i, j) * aux + hat(i, j));
    total += prod;
    int k = 0;
    for (; k < vcount + hcount; ++k) {
      const int base = k < vcount ? q : aux;
      if (++all[k] < base) break;
      all[k] = 0;
    }
    if (k == vcount + hcount) break;
  }
  return total;
}

/// O_m for integer u ∈ {0..m} through (−α)^{−m} Δ₋^u ψ^(m)(z|−u)^b_c Δ₋^{m−u},
/// evaluated on each monomial with the pointwise Δ₋.
inline Matrix o_m_third_route(int m, long u, long b, long c, const ModelParams& params,
                              int degree_bound) {
  const Polynomial psi = intertwiner_poly(m, Scalar(-u), b, c, params);
  Scalar factor = 1;
  for (int i = 0; i < m; ++i) factor /= -params.alpha;
  Matrix out(degree_bound + 1, degree_bound + 1);
  for (int j = 0; j <= degree_bound; ++j) {
    Polynomial f = Polynomial::monomial(j);
    for (long k = 0; k < m - u; ++k) f = delta_pointwise(f, -1, params.alpha);
    f = schoolbook_poly_mul(f, psi);
    for (long k = 0; k < u; ++k) f = delta_pointwise(f, -1, params.alpha);
    f = f * factor;
    for (int i = 0; i <= degree_bound; ++i) out(i, j) = f.coeff(i);
  }
  return out;
}

}  // namespace fusion_sos::testing
