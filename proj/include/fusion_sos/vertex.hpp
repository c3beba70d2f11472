#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "fusion_sos/matrix.hpp"
#include "fusion_sos/scalar.hpp"

namespace fusion_sos {

/// Free constants of the model family. Only w = (s+t)/2 enters the SOS
/// weights; s and t separately enter the intertwining vectors.
struct ModelParams {
  Scalar alpha = 1;
  Scalar s = rational(1, 4);
  Scalar t = rational(3, 4);

  Scalar w() const { return (s + t) / 2; }

  /// s = w + skew, t = w − skew.
  static ModelParams from_w(const Scalar& alpha, const Scalar& w, const Scalar& skew = 0);
};

/// Throws std::invalid_argument if alpha == 0.
void validate(const ModelParams& params);

/// Rational seven-vertex R-matrix in the basis e1⊗h1, e1⊗h2, e2⊗h1, e2⊗h2.
Matrix r7v(const Scalar& u, const ModelParams& params);

/// Swap operator on C^d ⊗ C^d.
Matrix permutation_op(std::size_t d);

/// The constant c with r7v(−1) = c(I − P). Throws MathError(NotProportional).
Scalar check_degeneracy(const ModelParams& params);

/// Embeds `op`, acting on the tensor factors listed in `sites` (in that
/// order), into the full space with factor dimensions `dims`. Identity on the
/// remaining factors.
Matrix embed_operator(const Matrix& op, std::span<const std::size_t> dims,
                      std::span<const std::size_t> sites);

/// R12·R13·R23 == R23·R13·R12 for operators already embedded in the
/// d1·d2·d3-dimensional space.
bool check_ybe_vertex(const Matrix& r12, const Matrix& r13, const Matrix& r23,
                      const std::array<std::size_t, 3>& dims);

/// Convenience: embeds R12 (factors 1,2), R13 (1,3), R23 (2,3) and checks.
bool check_ybe_vertex_local(const Matrix& r12, const Matrix& r13, const Matrix& r23,
                            const std::array<std::size_t, 3>& dims);

}  // namespace fusion_sos
