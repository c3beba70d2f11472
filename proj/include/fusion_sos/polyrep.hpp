#pragma once

#include <array>

#include "fusion_sos/matrix.hpp"
#include "fusion_sos/polynomial.hpp"
#include "fusion_sos/vertex.hpp"

namespace fusion_sos {

/// Linear map from polynomials of degree ≤ in_degree to polynomials of degree
/// ≤ out_degree, as a matrix on lowest-first coefficient vectors.
struct DiffOp {
  Matrix matrix;
  int in_degree = 0;
  int out_degree = 0;

  Polynomial apply(const Polynomial& p) const;

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.in_degree == b.in_degree && a.out_degree == b.out_degree && a.matrix == b.matrix;
  }
};

DiffOp identity_op(int degree);

/// Δ± f(z) = ½(f(z+α) ± f(z−α)). sign is +1 or −1. Δ₋ lowers the output bound
/// by one (never below zero).
DiffOp delta_op(int sign, int degree_bound, const ModelParams& params);

/// f ↦ p·f on polynomials of degree ≤ in_degree.
DiffOp multiply_op(const Polynomial& p, int in_degree);

/// a ∘ b. Throws MathError(ShapeMismatch) unless b.out_degree ≤ a.in_degree.
DiffOp compose(const DiffOp& a, const DiffOp& b);

/// Sum with outputs padded to the larger bound; inputs must agree.
DiffOp add(const DiffOp& a, const DiffOp& b);
DiffOp scale(const DiffOp& a, const Scalar& factor);

/// Drops output rows above `out_degree`. Throws MathError(LossyTruncation)
/// if any dropped row is nonzero.
DiffOp truncate(const DiffOp& a, int out_degree);

/// Restricts the domain to degree ≤ in_degree.
DiffOp restrict_input(const DiffOp& a, int in_degree);

/// Δ^k composed k times on degree ≤ degree_bound.
DiffOp delta_power(int sign, int k, int degree_bound, const ModelParams& params);

/// γ(z − shift, p). For p ≥ 0 a polynomial of degree p; for p < 0 the
/// reciprocal of γ(z − shift, −p).
struct GammaFactor {
  int p = 0;
  Scalar shift;
  Polynomial poly;  ///< γ(z − shift, |p|)
  bool reciprocal() const { return p < 0; }
};

GammaFactor gamma_poly(int p, const Scalar& shift, const ModelParams& params);

/// γ(z − shift, k)·Δ₋^(k+l)·γ(z − shift, l) == Δ₋^l·γ(z − shift, k+l)·Δ₋^k on
/// polynomials of degree ≤ degree_bound.
bool star_triangle_check(int k, int l, const Scalar& shift, int degree_bound,
                         const ModelParams& params);

/// Both sides of the two commutation relations Δ₋γ(z,p) = γ(z,p−1)[zΔ₋ + pαΔ₊]
/// and γ(z,p)Δ₋ = [Δ₋z − pαΔ₊]γ(z,p−1), p ≥ 1, on degree ≤ degree_bound.
bool gamma_commutation_check(int p, int degree_bound, const ModelParams& params);

/// Entries of the R^(n,1) difference-operator matrix on polynomials of
/// degree ≤ n. Entry [i][j] maps the h_j component to the h_i component.
std::array<std::array<DiffOp, 2>, 2> r_n1_matrix(int n, const Scalar& u,
                                                 const ModelParams& params);

/// Symmetric coordinates (k ↔ λ₁^(n−k)λ₂^k) to z-coefficients under λ₁ = −z,
/// λ₂ = 1, and back.
Matrix sym_to_poly_matrix(int n);
Matrix poly_to_sym_matrix(int n);
Polynomial sym_coords_to_poly(const Matrix& coords);
Matrix poly_to_sym_coords(const Polynomial& p, int n);

/// r_n1_matrix assembled into a 2(n+1) square matrix in symmetric coordinates
/// (coordinate k major, auxiliary index minor), comparable with fuse_n1.
Matrix r_n1_symmetric(int n, const Scalar& u, const ModelParams& params);

/// ψ^(n)(z|u)^a_b; zero unless b − a ∈ {−n, −n+2, …, n}.
Polynomial intertwiner_poly(int n, const Scalar& u, long a, long b, const ModelParams& params);

/// α^(−m) ∏_l {[z − α(−u+½(m−b−c)−t)]Δ₋ + α(u−l)Δ₊}
///        ∏_l′ {[z − α(−u+½(m+b+c)+s)]Δ₋ + α(u−m₊−l′)Δ₊}, ordered with l, l′
/// descending left to right. Throws MathError(AdjacencyViolation).
DiffOp o_m_product_form(int m, const Scalar& u, long b, long c, const ModelParams& params,
                        int degree_bound);

/// The γ-factorized form of the same operator. Only integer u ∈ {0, …, m}
/// give integer γ exponents; other u throw
/// MathError(UnsupportedEvaluationPoint).
DiffOp o_m_gamma_form(int m, const Scalar& u, long b, long c, const ModelParams& params,
                      int degree_bound);

}  // namespace fusion_sos
