#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fusion_sos/matrix.hpp"
#include "fusion_sos/polynomial.hpp"
#include "fusion_sos/vertex.hpp"

namespace fusion_sos {

/// ψ^(1)(u)^a_b in C²: (1, α(u−a−t)) for b = a+1, (1, α(u+a+s)) for
/// b = a−1, zero otherwise.
Matrix intertwiner_vector(const Scalar& u, long a, long b, const ModelParams& params);

/// Π_{1…n} ψ^(1)(u+n−1)^{c₀}_{c₁} ⊗ … ⊗ ψ^(1)(u)^{c_{n−1}}_{c_n} in (C²)^⊗n,
/// for the path given by its steps (each ±1). Throws MathError(InvalidPath) if
/// the steps do not lead from a to b.
Matrix fused_intertwiner_tensor(int n, const Scalar& u, long a, long b,
                                const std::vector<int>& steps, const ModelParams& params);

/// Canonical path: all +1 steps first. Returns the zero vector when b is not
/// reachable from a in n unit steps.
Matrix fused_intertwiner_tensor(int n, const Scalar& u, long a, long b,
                                const ModelParams& params);

/// fused_intertwiner_tensor projected to symmetric coordinates.
Matrix fused_intertwiner_sym(int n, const Scalar& u, long a, long b, const ModelParams& params);

/// {ψ^(n)(u)^anchor_b}_b (outgoing) or {ψ^(n)(u)^b_anchor}_b (incoming), with
/// b running from anchor+n down to anchor−n in steps of 2.
struct IntertwinerSet {
  int n = 1;
  Scalar u;
  long anchor = 0;
  bool outgoing = true;
  std::vector<long> labels;
  std::vector<Polynomial> vectors;
};

IntertwinerSet make_intertwiner_set(int n, const Scalar& u, long anchor, bool outgoing,
                                    const ModelParams& params);

/// Determinant of the coefficient matrix (columns = set members in label
/// order, rows = powers of z).
Scalar independence_determinant(const IntertwinerSet& set);

enum class RelationBasis {
  Adjacent,  ///< only b′ with |a−b′| ≤ m; the leftover equations are verified
  Full,      ///< every b′ with |b′−c| ≤ n
};

/// W^(n,m)(a,b;b′,c|u) for all b′, by expanding O_m ψ^(n)(z|0)^a_b in the
/// intertwiners ψ^(n)(z|0)^{b′}_c. Throws MathError(Singular) or
/// MathError(Inconsistent). Missing keys mean zero.
std::map<long, Scalar> solve_weights_from_relation(int n, int m, long a, long b, long c,
                                                   const Scalar& u, const ModelParams& params,
                                                   RelationBasis basis = RelationBasis::Adjacent);

/// R^(n,m)(u−v)·ψ^(n)(u)^a_b ⊗ ψ^(m)(v)^b_c ==
/// Σ_{b′} ψ^(n)(u)^{b′}_c ⊗ ψ^(m)(v)^a_{b′} · W(a,b;b′,c|u−v), in symmetric
/// coordinates. Weights default to the relation solver.
bool check_vertex_sos_matrix(int n, int m, long a, long b, long c, const Scalar& u,
                             const Scalar& v, const ModelParams& params,
                             const std::optional<std::map<long, Scalar>>& weights = std::nullopt);

/// Residual vector of the identity above for an arbitrary R-operator and
/// arbitrary intertwiner vectors (symmetric coordinates).
Matrix correspondence_residual(const Matrix& r, const std::map<long, Scalar>& weights,
                               const Matrix& lhs_n, const Matrix& lhs_m,
                               const std::map<long, std::pair<Matrix, Matrix>>& rhs_vectors);

}  // namespace fusion_sos
