#include "fusion_sos/polyrep.hpp"

#include <algorithm>
#include <vector>

#include "fusion_sos/error.hpp"

namespace fusion_sos {

namespace {

Matrix pad_rows(const Matrix& m, std::size_t rows) {
  if (m.rows() == rows) return m;
  Matrix out(rows, m.cols());
  for (std::size_t i = 0; i < std::min(rows, m.rows()); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

DiffOp pad_output(const DiffOp& a, int out_degree) {
  if (out_degree < a.out_degree) return truncate(a, out_degree);
  return {pad_rows(a.matrix, out_degree + 1), a.in_degree, out_degree};
}

// (z − root)·Δ₋ + plus_coeff·Δ₊ on degree ≤ d; maps the space into itself.
DiffOp first_order_op(const Scalar& root, const Scalar& plus_coeff, int d,
                      const ModelParams& params) {
  DiffOp dm = delta_op(-1, d, params);
  DiffOp zdm = compose(multiply_op(Polynomial::linear(root), dm.out_degree), dm);
  DiffOp sum = add(zdm, scale(delta_op(+1, d, params), plus_coeff));
  return truncate(sum, d);
}

std::vector<Scalar> gamma_roots(int p, const Scalar& shift, const ModelParams& params) {
  std::vector<Scalar> roots;
  for (int j = 0; j < p; ++j) roots.push_back(shift - params.alpha * (2 * j + 1 - p));
  return roots;
}

// Numerator polynomial over ∏(z − r) for r in roots; just enough structure
// to push reciprocal γ factors through Δ₋ exactly.
struct RationalFn {
  Polynomial num;
  std::vector<Scalar> roots;

  void cancel() {
    for (std::size_t i = 0; i < roots.size();) {
      if (num.evaluate(roots[i]) == 0) {
        num = divmod(num, Polynomial::linear(roots[i])).first;
        roots.erase(roots.begin() + i);
      } else {
        ++i;
      }
    }
  }

  void multiply_roots(const std::vector<Scalar>& factors) {
    for (const auto& r : factors) {
      auto it = std::find(roots.begin(), roots.end(), r);
      if (it != roots.end()) {
        roots.erase(it);
      } else {
        num *= Polynomial::linear(r);
      }
    }
  }

  void divide_roots(const std::vector<Scalar>& factors) {
    roots.insert(roots.end(), factors.begin(), factors.end());
    cancel();
  }

  RationalFn shifted(const Scalar& h) const {
    RationalFn out{poly_shift(num, h), roots};
    for (auto& r : out.roots) r -= h;
    return out;
  }
};

RationalFn difference(const RationalFn& f, const RationalFn& g) {
  // Common denominator: multiset union.
  std::vector<Scalar> common = f.roots;
  std::vector<Scalar> extra_f;  // roots of g missing from f
  std::vector<Scalar> pool = f.roots;
  for (const auto& r : g.roots) {
    auto it = std::find(pool.begin(), pool.end(), r);
    if (it != pool.end()) {
      pool.erase(it);
    } else {
      common.push_back(r);
      extra_f.push_back(r);
    }
  }
  std::vector<Scalar> extra_g = common;
  for (const auto& r : g.roots) extra_g.erase(std::find(extra_g.begin(), extra_g.end(), r));
  RationalFn out{f.num * Polynomial::from_roots(extra_f) - g.num * Polynomial::from_roots(extra_g),
                 common};
  out.cancel();
  return out;
}

RationalFn delta_minus(const RationalFn& f, const ModelParams& params) {
  RationalFn d = difference(f.shifted(params.alpha), f.shifted(-params.alpha));
  d.num *= rational(1, 2);
  return d;
}

void apply_gamma(RationalFn& f, int p, const Scalar& shift, const ModelParams& params) {
  if (p >= 0) {
    f.multiply_roots(gamma_roots(p, shift, params));
  } else {
    f.divide_roots(gamma_roots(-p, shift, params));
  }
}

}  // namespace

Polynomial DiffOp::apply(const Polynomial& p) const {
  auto coeffs = p.coefficient_vector(in_degree);
  Matrix out = matrix * Matrix::column(coeffs);
  std::vector<Scalar> v(out.rows());
  for (std::size_t i = 0; i < out.rows(); ++i) v[i] = out(i, 0);
  return Polynomial(std::move(v));
}

DiffOp identity_op(int degree) { return {Matrix::identity(degree + 1), degree, degree}; }

DiffOp delta_op(int sign, int degree_bound, const ModelParams& params) {
  const int out_degree = sign > 0 ? degree_bound : std::max(degree_bound - 1, 0);
  Matrix m(out_degree + 1, degree_bound + 1);
  for (int k = 0; k <= degree_bound; ++k) {
    Polynomial zk = Polynomial::monomial(k);
    Polynomial image = poly_shift(zk, params.alpha);
    Polynomial back = poly_shift(zk, -params.alpha);
    image = sign > 0 ? image + back : image - back;
    image *= rational(1, 2);
    for (int j = 0; j <= image.degree(); ++j) m(j, k) = image.coeff(j);
  }
  return {std::move(m), degree_bound, out_degree};
}

DiffOp multiply_op(const Polynomial& p, int in_degree) {
  const int out_degree = in_degree + std::max(p.degree(), 0);
  Matrix m(out_degree + 1, in_degree + 1);
  for (int k = 0; k <= in_degree; ++k) {
    for (int j = 0; j <= p.degree(); ++j) m(j + k, k) = p.coeff(j);
  }
  return {std::move(m), in_degree, out_degree};
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (b.out_degree > a.in_degree) {
    throw MathError(ErrorKind::ShapeMismatch, "compose: inner output degree " +
                                                  std::to_string(b.out_degree) +
                                                  " exceeds outer input degree " +
                                                  std::to_string(a.in_degree));
  }
  return {a.matrix * pad_rows(b.matrix, a.in_degree + 1), b.in_degree, a.out_degree};
}

DiffOp add(const DiffOp& a, const DiffOp& b) {
  if (a.in_degree != b.in_degree) throw MathError(ErrorKind::ShapeMismatch, "add: inputs");
  const int out = std::max(a.out_degree, b.out_degree);
  return {pad_output(a, out).matrix + pad_output(b, out).matrix, a.in_degree, out};
}

DiffOp scale(const DiffOp& a, const Scalar& factor) {
  return {a.matrix * factor, a.in_degree, a.out_degree};
}

DiffOp truncate(const DiffOp& a, int out_degree) {
  for (int i = out_degree + 1; i <= a.out_degree; ++i) {
    for (std::size_t j = 0; j < a.matrix.cols(); ++j) {
      if (a.matrix(i, j) != 0) {
        throw MathError(ErrorKind::LossyTruncation,
                        "operator output exceeds degree " + std::to_string(out_degree));
      }
    }
  }
  return {pad_rows(a.matrix, out_degree + 1), a.in_degree, out_degree};
}

DiffOp restrict_input(const DiffOp& a, int in_degree) {
  Matrix m(a.matrix.rows(), in_degree + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (int j = 0; j <= in_degree; ++j) m(i, j) = a.matrix(i, j);
  }
  return {std::move(m), in_degree, a.out_degree};
}

DiffOp delta_power(int sign, int k, int degree_bound, const ModelParams& params) {
  DiffOp op = identity_op(degree_bound);
  for (int i = 0; i < k; ++i) op = compose(delta_op(sign, op.out_degree, params), op);
  return op;
}

GammaFactor gamma_poly(int p, const Scalar& shift, const ModelParams& params) {
  GammaFactor g;
  g.p = p;
  g.shift = shift;
  auto roots = gamma_roots(std::abs(p), shift, params);
  g.poly = Polynomial::from_roots(roots);
  return g;
}

bool star_triangle_check(int k, int l, const Scalar& shift, int degree_bound,
                         const ModelParams& params) {
  const int d = degree_bound;
  Polynomial gk = gamma_poly(k, shift, params).poly;
  Polynomial gl = gamma_poly(l, shift, params).poly;
  Polynomial gkl = gamma_poly(k + l, shift, params).poly;

  DiffOp lhs = multiply_op(gl, d);
  lhs = compose(delta_power(-1, k + l, lhs.out_degree, params), lhs);
  lhs = compose(multiply_op(gk, lhs.out_degree), lhs);

  DiffOp rhs = delta_power(-1, k, d, params);
  rhs = compose(multiply_op(gkl, rhs.out_degree), rhs);
  rhs = compose(delta_power(-1, l, rhs.out_degree, params), rhs);

  const int out = std::max(lhs.out_degree, rhs.out_degree);
  return pad_output(lhs, out).matrix == pad_output(rhs, out).matrix;
}

bool gamma_commutation_check(int p, int degree_bound, const ModelParams& params) {
  const int d = degree_bound;
  const Scalar zero = 0;
  Polynomial gp = gamma_poly(p, zero, params).poly;
  Polynomial gp1 = gamma_poly(p - 1, zero, params).poly;
  const Polynomial z = Polynomial::monomial(1);

  // Δ₋γ(z,p) = γ(z,p−1)[zΔ₋ + pαΔ₊]
  DiffOp l1 = multiply_op(gp, d);
  l1 = compose(delta_op(-1, l1.out_degree, params), l1);
  DiffOp dm = delta_op(-1, d, params);
  DiffOp inner = add(compose(multiply_op(z, dm.out_degree), dm),
                     scale(delta_op(+1, d, params), p * params.alpha));
  DiffOp r1 = compose(multiply_op(gp1, inner.out_degree), inner);

  // γ(z,p)Δ₋ = [Δ₋z − pαΔ₊]γ(z,p−1)
  DiffOp l2 = compose(multiply_op(gp, dm.out_degree), dm);
  DiffOp g1 = multiply_op(gp1, d);
  DiffOp zg = compose(multiply_op(z, g1.out_degree), g1);
  DiffOp r2 = add(compose(delta_op(-1, zg.out_degree, params), zg),
                  compose(scale(delta_op(+1, g1.out_degree, params), -p * params.alpha), g1));

  auto same = [](const DiffOp& a, const DiffOp& b) {
    const int out = std::max(a.out_degree, b.out_degree);
    return pad_output(a, out).matrix == pad_output(b, out).matrix;
  };
  return same(l1, r1) && same(l2, r2);
}

std::array<std::array<DiffOp, 2>, 2> r_n1_matrix(int n, const Scalar& u,
                                                 const ModelParams& params) {
  const Scalar& a = params.alpha;
  const Scalar inv_a = 1 / a;
  const Polynomial z = Polynomial::monomial(1);
  const Polynomial z2 = Polynomial::monomial(2);
  DiffOp dp = delta_op(+1, n, params);
  DiffOp dm = delta_op(-1, n, params);
  DiffOp z_dm = compose(multiply_op(z, dm.out_degree), dm);
  DiffOp z2_dm = compose(multiply_op(z2, dm.out_degree), dm);
  DiffOp z_dp = compose(multiply_op(z, dp.out_degree), dp);

  std::array<std::array<DiffOp, 2>, 2> r;
  r[0][0] = truncate(add(scale(dp, u), scale(z_dm, inv_a)), n);
  r[0][1] = truncate(scale(dm, -inv_a), n);
  r[1][0] = truncate(add(add(scale(z2_dm, inv_a), scale(z_dp, Scalar(-n))),
                         scale(dm, -a * u * (u + n))),
                     n);
  r[1][1] = truncate(add(scale(dp, u + n), scale(z_dm, -inv_a)), n);
  for (auto& row : r) {
    for (auto& e : row) e = pad_output(e, n);
  }
  return r;
}

Matrix sym_to_poly_matrix(int n) {
  Matrix m(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) m(j, n - j) = (j % 2 == 0) ? 1 : -1;
  return m;
}

Matrix poly_to_sym_matrix(int n) {
  Matrix m(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) m(n - j, j) = (j % 2 == 0) ? 1 : -1;
  return m;
}

Polynomial sym_coords_to_poly(const Matrix& coords) {
  const int n = static_cast<int>(coords.rows()) - 1;
  Matrix c = sym_to_poly_matrix(n) * coords;
  std::vector<Scalar> v(n + 1);
  for (int j = 0; j <= n; ++j) v[j] = c(j, 0);
  return Polynomial(std::move(v));
}

Matrix poly_to_sym_coords(const Polynomial& p, int n) {
  auto v = p.coefficient_vector(n);
  return poly_to_sym_matrix(n) * Matrix::column(v);
}

Matrix r_n1_symmetric(int n, const Scalar& u, const ModelParams& params) {
  auto r = r_n1_matrix(n, u, params);
  const Matrix to_poly = sym_to_poly_matrix(n);
  const Matrix to_sym = poly_to_sym_matrix(n);
  Matrix out(2 * (n + 1), 2 * (n + 1));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Matrix block = to_sym * r[i][j].matrix * to_poly;
      for (int kk = 0; kk <= n; ++kk) {
        for (int k = 0; k <= n; ++k) out(kk * 2 + i, k * 2 + j) = block(kk, k);
      }
    }
  }
  return out;
}

Polynomial intertwiner_poly(int n, const Scalar& u, long a, long b, const ModelParams& params) {
  const long d = b - a;
  if (d > n || d < -n || (d + n) % 2 != 0) return Polynomial();
  const long n_plus = (n + d) / 2;
  const long n_minus = (n - d) / 2;
  Polynomial p = Polynomial::constant(n % 2 == 0 ? 1 : -1);
  for (long k = 1; k <= n_plus; ++k) {
    p *= Polynomial::linear(params.alpha * (u + n - a - 2 * k + 1 - params.t));
  }
  for (long q = 1; q <= n_minus; ++q) {
    p *= Polynomial::linear(params.alpha * (u + n + a - 2 * q + 1 + params.s));
  }
  return p;
}

namespace {

struct OmSplit {
  long m_plus;
  long m_minus;
};

OmSplit om_split(int m, long b, long c) {
  const long d = c - b;
  if (d > m || d < -m || (d + m) % 2 != 0) {
    throw MathError(ErrorKind::AdjacencyViolation,
                    "c - b = " + std::to_string(d) + " at m = " + std::to_string(m));
  }
  return {(m + d) / 2, (m - d) / 2};
}

}  // namespace

DiffOp o_m_product_form(int m, const Scalar& u, long b, long c, const ModelParams& params,
                        int degree_bound) {
  const auto [m_plus, m_minus] = om_split(m, b, c);
  const Scalar& a = params.alpha;
  const Scalar root1 = a * (-u + rational(m - b - c, 2) - params.t);
  const Scalar root2 = a * (-u + rational(m + b + c, 2) + params.s);
  DiffOp op = identity_op(degree_bound);
  // Rightmost factor acts first: l′ = 0, 1, …, then l = 0, 1, ….
  for (long lp = 0; lp < m_minus; ++lp) {
    op = compose(first_order_op(root2, a * (u - m_plus - lp), degree_bound, params), op);
  }
  for (long l = 0; l < m_plus; ++l) {
    op = compose(first_order_op(root1, a * (u - l), degree_bound, params), op);
  }
  Scalar prefactor = 1;
  for (int i = 0; i < m; ++i) prefactor /= a;
  return scale(op, prefactor);
}

DiffOp o_m_gamma_form(int m, const Scalar& u, long b, long c, const ModelParams& params,
                      int degree_bound) {
  const auto [m_plus, m_minus] = om_split(m, b, c);
  if (!is_integer(u)) {
    throw MathError(ErrorKind::UnsupportedEvaluationPoint,
                    "gamma exponents need integer u, got " + to_string(u));
  }
  const long ui = to_long(u);
  const Scalar& a = params.alpha;
  const Scalar u1 = a * (-u + rational(m - b - c, 2) - params.t);
  const Scalar u2 = a * (-u + rational(m + b + c, 2) + params.s);
  Scalar prefactor = 1;
  for (int i = 0; i < m; ++i) prefactor /= a;

  Matrix out(degree_bound + 1, degree_bound + 1);
  for (int k = 0; k <= degree_bound; ++k) {
    RationalFn f{Polynomial::monomial(k), {}};
    apply_gamma(f, static_cast<int>(ui - m_plus), u2, params);
    for (long i = 0; i < m_minus; ++i) f = delta_minus(f, params);
    apply_gamma(f, static_cast<int>(m - ui), u2, params);
    apply_gamma(f, static_cast<int>(ui), u1, params);
    for (long i = 0; i < m_plus; ++i) f = delta_minus(f, params);
    apply_gamma(f, static_cast<int>(m_plus - ui), u1, params);
    f.cancel();
    if (!f.roots.empty()) {
      throw MathError(ErrorKind::Pole, "gamma form left a denominator at u = " + to_string(u));
    }
    auto coeffs = (f.num * prefactor).coefficient_vector(degree_bound);
    for (int j = 0; j <= degree_bound; ++j) out(j, k) = coeffs[j];
  }
  return {std::move(out), degree_bound, degree_bound};
}

}  // namespace fusion_sos
