#pragma once

#include "fusion_sos/matrix.hpp"
#include "fusion_sos/vertex.hpp"

namespace fusion_sos {

/// Coordinates on the symmetric subspace S^n C² ⊂ (C²)^⊗n. Coordinate k
/// corresponds to the monomial λ₁^(n−k) λ₂^k, i.e. to the symmetrized tensors
/// with k factors equal to e².
struct SymBasis {
  int n = 0;
  Matrix embed;    ///< 2ⁿ × (n+1); column k is the average of its basis tensors.
  Matrix project;  ///< (n+1) × 2ⁿ; row k sums the tensors with k factors e².
};

SymBasis sym_basis(int n);

/// Π_{1…n}: average of the n! factor permutations on (C²)^⊗n.
Matrix symmetrizer(int n);

/// The fused operator on (C²)^⊗(n+m), factors ordered (first space sites
/// 1…n, second space sites 1…m), before restriction to symmetric subspaces.
Matrix fused_full_operator(int n, int m, const Scalar& u, const ModelParams& params);

/// fused_full_operator restricted to S^n C² ⊗ S^m C² (coordinates k major).
Matrix fused_product_nm(int n, int m, const Scalar& u, const ModelParams& params);

/// ∏_{i=0}^{m−1} ∏_{j=1}^{n−1} (u − i + j): the scalar by which the literal
/// fused product exceeds the normalized operator.
Scalar fusion_scalar(int n, int m, const Scalar& u);

/// Normalized fused R-operator: fused_product_nm / fusion_scalar. At zeros of
/// the scalar the value is obtained by exact interpolation in u.
Matrix fuse_nm(int n, int m, const Scalar& u, const ModelParams& params);

inline Matrix fuse_n1(int n, const Scalar& u, const ModelParams& params) {
  return fuse_nm(n, 1, u, params);
}

/// (I − Π_n⊗Π_m) · fused_full_operator · (Π_n⊗Π_m). Zero iff the image of the
/// symmetric subspace stays symmetric.
Matrix fusion_image_residual(int n, int m, const Scalar& u, const ModelParams& params);

}  // namespace fusion_sos
