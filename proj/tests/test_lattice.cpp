#include <doctest.h>

#include "fusion_sos/fusion.hpp"
#include "fusion_sos/lattice.hpp"
#include "fusion_sos/sos.hpp"
#include "support.hpp"

using namespace fusion_sos;
using fusion_sos::testing::Gen;

namespace {

const ModelParams kParams = ModelParams::from_w(rational(5, 3), rational(1, 2), rational(1, 7));

/// Periodic SOS sum by brute force over every height assignment.
Scalar sos_bruteforce(int N, int M, int n, int m, const Scalar& u, long lo, long hi) {
  std::vector<long> h(N * M, lo);
  auto at = [&](int i, int j) { return h[(j % M) * N + (i % N)]; };
  Scalar total = 0;
  while (true) {
    Scalar prod = 1;
    for (int j = 0; j < M && prod != 0; ++j)
      for (int i = 0; i < N && prod != 0; ++i)
        prod *= w_nm_sum(WeightQuery{n, m, at(i, j + 1), at(i + 1, j + 1), at(i, j), at(i + 1, j), u}, kParams);
    total += prod;
    std::size_t k = 0;
    for (; k < h.size(); ++k) {
      if (++h[k] <= hi) break;
      h[k] = lo;
    }
    if (k == h.size()) break;
  }
  return total;
}

}  // namespace

TEST_CASE("transfer-matrix partition sum equals exhaustive enumeration") {
  Gen g(81);
  for (int N = 1; N <= 3; ++N)
    for (int M = 1; M <= 3; ++M) {
      Scalar u = g.rational();
      LatticeSpec spec{N, M, 1, 1, u};
      CHECK(partition_vertex(spec, kParams) ==
            testing::vertex_partition_bruteforce(fuse_nm(1, 1, u, kParams), 2, 2, N, M));
    }
  LatticeSpec fused{2, 2, 2, 1, rational(3, 7)};
  CHECK(partition_vertex(fused, kParams) ==
        testing::vertex_partition_bruteforce(fuse_nm(2, 1, fused.u, kParams), 3, 2, 2, 2));
}

TEST_CASE("transfer matrices commute") {
  Gen g(82);
  for (int N = 1; N <= 3; ++N) {
    Scalar u = g.rational(), v = g.rational();
    LatticeSpec su{N, 1, 1, 1, u}, sv{N, 1, 1, 1, v};
    CHECK(commutator(transfer_matrix_vertex(su, kParams), transfer_matrix_vertex(sv, kParams)).is_zero());
  }
}

TEST_CASE("SOS partition sum agrees with brute force") {
  for (auto [N, M] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    Scalar u = rational(2, 7);
    CHECK(partition_sos(LatticeSpec{N, M, 2, 2, u}, -2, 2, kParams) == sos_bruteforce(N, M, 2, 2, u, -2, 2));
    CHECK(partition_sos(LatticeSpec{N, M, 1, 1, u}, -2, 2, kParams) == sos_bruteforce(N, M, 1, 1, u, -2, 2));
  }
}

TEST_CASE("1x1 periodic SOS lattice vanishes for odd spins") {
  CHECK(partition_sos(LatticeSpec{1, 1, 1, 1, rational(1, 3)}, -3, 3, kParams) == 0);
  CHECK(partition_sos(LatticeSpec{1, 1, 2, 2, rational(1, 3)}, -3, 3, kParams) != 0);
}
