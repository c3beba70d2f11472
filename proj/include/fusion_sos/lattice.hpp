#pragma once

#include "fusion_sos/matrix.hpp"
#include "fusion_sos/vertex.hpp"

namespace fusion_sos {

/// Periodic N×M lattice. For vertex models n and m are the quantum and
/// auxiliary spins (edge dimensions n+1 and m+1); for SOS models they are the
/// horizontal and vertical adjacency bounds.
struct LatticeSpec {
  int N = 2;
  int M = 2;
  int n = 1;
  int m = 1;
  Scalar u;
};

/// T(u)[α⃗, γ⃗] = Σ_h ∏_i R[(α_i, h_{i+1}), (γ_i, h_i)] with R = fuse_nm(n, m, u)
/// and h_{N+1} = h_1. Dimension (n+1)^N.
Matrix transfer_matrix_vertex(const LatticeSpec& spec, const ModelParams& params);

/// tr T(u)^M.
Scalar partition_vertex(const LatticeSpec& spec, const ModelParams& params);

/// Σ over periodic height assignments h(i,j) ∈ [lo, hi] of
/// ∏ W^(n,m)(h(i,j+1), h(i+1,j+1); h(i,j), h(i+1,j) | u). The result depends on
/// the window.
Scalar partition_sos(const LatticeSpec& spec, long lo, long hi, const ModelParams& params);

}  // namespace fusion_sos
