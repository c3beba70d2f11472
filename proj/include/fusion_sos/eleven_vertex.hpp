#pragma once

#include "fusion_sos/matrix.hpp"
#include "fusion_sos/polynomial.hpp"
#include "fusion_sos/vertex.hpp"

namespace fusion_sos {

/// [[1, 0], [−αu, 1]].
Matrix shift_op_unit(const Scalar& u, const ModelParams& params);

/// A^(n)(u): [A^(1)(u)]^⊗n restricted to symmetric coordinates. In the
/// polynomial picture it sends f(z) to f(z + αu).
Matrix shift_op(int n, const Scalar& u, const ModelParams& params);

/// Eleven-vertex R-matrix with difference parameter d.
Matrix r11v(const Scalar& d, const ModelParams& params);

/// [A^(n)(u) ⊗ A^(m)(v)] · fuse_nm(n, m, u−v) · [A^(n)(−u) ⊗ A^(m)(−v)].
Matrix similarity_fused(int n, int m, const Scalar& u, const Scalar& v,
                        const ModelParams& params);

/// Spectral-parameter-free intertwiner Ψ^(n)^a_b as a polynomial in z; zero
/// when b is not reachable from a in n unit steps.
Polynomial psi_const(int n, long a, long b, const ModelParams& params);

}  // namespace fusion_sos
