#include "fusion_sos/lattice.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "fusion_sos/error.hpp"
#include "fusion_sos/fusion.hpp"
#include "fusion_sos/sos.hpp"

namespace fusion_sos {

namespace {

std::vector<int> digits(std::size_t index, int count, int base) {
  std::vector<int> d(count);
  for (int i = count; i-- > 0;) {
    d[i] = static_cast<int>(index % base);
    index /= base;
  }
  return d;
}

}  // namespace

Matrix transfer_matrix_vertex(const LatticeSpec& spec, const ModelParams& params) {
  const int q = spec.n + 1, aux = spec.m + 1, N = spec.N;
  const Matrix r = fuse_nm(spec.n, spec.m, spec.u, params);
  std::size_t dim = 1, aux_states = 1;
  for (int i = 0; i < N; ++i) {
    dim *= q;
    aux_states *= aux;
  }
  Matrix t(dim, dim);
  for (std::size_t row = 0; row < dim; ++row) {
    const auto out = digits(row, N, q);
    for (std::size_t col = 0; col < dim; ++col) {
      const auto in = digits(col, N, q);
      Scalar sum = 0;
      for (std::size_t hs = 0; hs < aux_states; ++hs) {
        const auto h = digits(hs, N, aux);
        Scalar prod = 1;
        for (int i = 0; i < N && prod != 0; ++i) {
          prod *= r(out[i] * aux + h[(i + 1) % N], in[i] * aux + h[i]);
        }
        sum += prod;
      }
      t(row, col) = sum;
    }
  }
  return t;
}

Scalar partition_vertex(const LatticeSpec& spec, const ModelParams& params) {
  return power(transfer_matrix_vertex(spec, params), spec.M).trace();
}

Scalar partition_sos(const LatticeSpec& spec, long lo, long hi, const ModelParams& params) {
  if (hi < lo) return 0;
  const int N = spec.N, M = spec.M;
  const long width = hi - lo + 1;
  // Weight table over the window, indexed by (a, b, b', c) offsets.
  std::vector<Scalar> table(width * width * width * width);
  auto at = [&](long a, long b, long bp, long c) -> Scalar& {
    return table[(((a - lo) * width + (b - lo)) * width + (bp - lo)) * width + (c - lo)];
  };
  for (long a = lo; a <= hi; ++a)
    for (long b = lo; b <= hi; ++b)
      for (long bp = lo; bp <= hi; ++bp)
        for (long c = lo; c <= hi; ++c)
          at(a, b, bp, c) = w_nm_sum(WeightQuery{spec.n, spec.m, a, b, bp, c, spec.u}, params);

  std::vector<long> h(static_cast<std::size_t>(N) * M, lo);
  auto height = [&](int i, int j) { return h[((j % M) * N) + (i % N)]; };
  // A face (i,j) is complete once all four corners are assigned; with
  // row-major assignment that is known when the last corner index is reached.
  std::vector<std::vector<std::pair<int, int>>> faces_done(static_cast<std::size_t>(N) * M);
  for (int j = 0; j < M; ++j) {
    for (int i = 0; i < N; ++i) {
      int last = 0;
      for (auto [di, dj] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
        last = std::max(last, ((j + dj) % M) * N + (i + di) % N);
      }
      faces_done[last].push_back({i, j});
    }
  }
  Scalar total = 0;
  std::function<void(std::size_t, const Scalar&)> recurse = [&](std::size_t pos,
                                                                const Scalar& acc) {
    if (pos == h.size()) {
      total += acc;
      return;
    }
    for (long value = lo; value <= hi; ++value) {
      h[pos] = value;
      Scalar next = acc;
      for (auto [i, j] : faces_done[pos]) {
        next *= at(height(i, j + 1), height(i + 1, j + 1), height(i, j), height(i + 1, j));
        if (next == 0) break;
      }
      if (next != 0) recurse(pos + 1, next);
    }
  };
  recurse(0, Scalar(1));
  return total;
}

}  // namespace fusion_sos
