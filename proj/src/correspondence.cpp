#include "fusion_sos/correspondence.hpp"

#include "fusion_sos/error.hpp"
#include "fusion_sos/fusion.hpp"
#include "fusion_sos/polyrep.hpp"
#include "fusion_sos/sos.hpp"

namespace fusion_sos {

Matrix intertwiner_vector(const Scalar& u, long a, long b, const ModelParams& params) {
  Matrix v(2, 1);
  if (b == a + 1) {
    v(0, 0) = 1;
    v(1, 0) = params.alpha * (u - a - params.t);
  } else if (b == a - 1) {
    v(0, 0) = 1;
    v(1, 0) = params.alpha * (u + a + params.s);
  }
  return v;
}

Matrix fused_intertwiner_tensor(int n, const Scalar& u, long a, long b,
                                const std::vector<int>& steps, const ModelParams& params) {
  if (static_cast<int>(steps.size()) != n) {
    throw MathError(ErrorKind::InvalidPath, "path length differs from n");
  }
  Matrix v = Matrix::identity(1);
  long label = a;
  for (int i = 0; i < n; ++i) {
    if (steps[i] != 1 && steps[i] != -1) throw MathError(ErrorKind::InvalidPath, "non-unit step");
    v = kron(v, intertwiner_vector(u + (n - 1 - i), label, label + steps[i], params));
    label += steps[i];
  }
  if (label != b) throw MathError(ErrorKind::InvalidPath, "path does not end at b");
  if (n > 1) v = symmetrizer(n) * v;
  return v;
}

Matrix fused_intertwiner_tensor(int n, const Scalar& u, long a, long b,
                                const ModelParams& params) {
  if (!adjacent(b - a, n)) return Matrix(std::size_t{1} << n, 1);
  const long ups = (n + (b - a)) / 2;
  std::vector<int> steps(n, -1);
  for (long i = 0; i < ups; ++i) steps[i] = 1;
  return fused_intertwiner_tensor(n, u, a, b, steps, params);
}

Matrix fused_intertwiner_sym(int n, const Scalar& u, long a, long b, const ModelParams& params) {
  return sym_basis(n).project * fused_intertwiner_tensor(n, u, a, b, params);
}

IntertwinerSet make_intertwiner_set(int n, const Scalar& u, long anchor, bool outgoing,
                                    const ModelParams& params) {
  IntertwinerSet set;
  set.n = n;
  set.u = u;
  set.anchor = anchor;
  set.outgoing = outgoing;
  for (long b = anchor + n; b >= anchor - n; b -= 2) {
    set.labels.push_back(b);
    set.vectors.push_back(outgoing ? intertwiner_poly(n, u, anchor, b, params)
                                   : intertwiner_poly(n, u, b, anchor, params));
  }
  return set;
}

Scalar independence_determinant(const IntertwinerSet& set) {
  const int n = set.n;
  Matrix m(n + 1, set.vectors.size());
  for (std::size_t j = 0; j < set.vectors.size(); ++j) {
    auto coeffs = set.vectors[j].coefficient_vector(n);
    for (int i = 0; i <= n; ++i) m(i, j) = coeffs[i];
  }
  return determinant(m);
}

std::map<long, Scalar> solve_weights_from_relation(int n, int m, long a, long b, long c,
                                                   const Scalar& u, const ModelParams& params,
                                                   RelationBasis basis) {
  if (!adjacent(a - b, n) || !adjacent(b - c, m)) {
    throw MathError(ErrorKind::AdjacencyViolation, "relation solver labels");
  }
  const Scalar zero = 0;
  Polynomial image =
      o_m_product_form(m, u, b, c, params, n).apply(intertwiner_poly(n, zero, a, b, params));

  std::vector<long> unknowns;
  for (long bp = c + n; bp >= c - n; bp -= 2) {
    if (basis == RelationBasis::Full || adjacent(a - bp, m)) unknowns.push_back(bp);
  }
  Matrix system(n + 1, unknowns.size());
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    auto coeffs = intertwiner_poly(n, zero, unknowns[j], c, params).coefficient_vector(n);
    for (int i = 0; i <= n; ++i) system(i, j) = coeffs[i];
  }
  Matrix x = solve_exact(system, Matrix::column(image.coefficient_vector(n)));
  std::map<long, Scalar> weights;
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    if (x(j, 0) != 0) weights[unknowns[j]] = x(j, 0);
  }
  return weights;
}

Matrix correspondence_residual(const Matrix& r, const std::map<long, Scalar>& weights,
                               const Matrix& lhs_n, const Matrix& lhs_m,
                               const std::map<long, std::pair<Matrix, Matrix>>& rhs_vectors) {
  Matrix residual = r * kron(lhs_n, lhs_m);
  for (const auto& [bp, wt] : weights) {
    auto it = rhs_vectors.find(bp);
    if (it == rhs_vectors.end()) continue;
    residual -= kron(it->second.first, it->second.second) * wt;
  }
  return residual;
}

bool check_vertex_sos_matrix(int n, int m, long a, long b, long c, const Scalar& u,
                             const Scalar& v, const ModelParams& params,
                             const std::optional<std::map<long, Scalar>>& weights) {
  auto table = weights ? *weights : solve_weights_from_relation(n, m, a, b, c, u - v, params);
  std::map<long, std::pair<Matrix, Matrix>> rhs;
  for (long bp = c + n; bp >= c - n; bp -= 2) {
    rhs.emplace(bp, std::make_pair(fused_intertwiner_sym(n, u, bp, c, params),
                                   fused_intertwiner_sym(m, v, a, bp, params)));
  }
  Matrix residual = correspondence_residual(
      fuse_nm(n, m, u - v, params), table, fused_intertwiner_sym(n, u, a, b, params),
      fused_intertwiner_sym(m, v, b, c, params), rhs);
  return residual.is_zero();
}

}  // namespace fusion_sos
