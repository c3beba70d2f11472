#include "fusion_sos/eleven_vertex.hpp"

#include "fusion_sos/fusion.hpp"
#include "fusion_sos/polyrep.hpp"
#include "fusion_sos/sos.hpp"

namespace fusion_sos {

Matrix shift_op_unit(const Scalar& u, const ModelParams& params) {
  return Matrix{{1, 0}, {-params.alpha * u, 1}};
}

Matrix shift_op(int n, const Scalar& u, const ModelParams& params) {
  Matrix full = Matrix::identity(1);
  const Matrix unit = shift_op_unit(u, params);
  for (int i = 0; i < n; ++i) full = kron(full, unit);
  SymBasis basis = sym_basis(n);
  return basis.project * full * basis.embed;
}

Matrix r11v(const Scalar& d, const ModelParams& params) {
  const Scalar& a = params.alpha;
  Matrix r(4, 4);
  r(0, 0) = d + 1;
  r(1, 0) = a * d;
  r(1, 1) = d;
  r(1, 2) = 1;
  r(2, 0) = -a * d;
  r(2, 1) = 1;
  r(2, 2) = d;
  r(3, 0) = a * a * d;
  r(3, 1) = a * d;
  r(3, 2) = -a * d;
  r(3, 3) = d + 1;
  return r;
}

Matrix similarity_fused(int n, int m, const Scalar& u, const Scalar& v,
                        const ModelParams& params) {
  return kron(shift_op(n, u, params), shift_op(m, v, params)) * fuse_nm(n, m, u - v, params) *
         kron(shift_op(n, -u, params), shift_op(m, -v, params));
}

Polynomial psi_const(int n, long a, long b, const ModelParams& params) {
  if (!adjacent(b - a, n)) return Polynomial();
  const long n_plus = (n + (b - a)) / 2;
  const long n_minus = (n - (b - a)) / 2;
  Polynomial p = Polynomial::constant(n % 2 == 0 ? 1 : -1);
  for (long k = 1; k <= n_plus; ++k) {
    p *= Polynomial::linear(params.alpha * (n - a - 2 * k + 1 - params.t));
  }
  for (long q = 1; q <= n_minus; ++q) {
    p *= Polynomial::linear(params.alpha * (n + a - 2 * q + 1 + params.s));
  }
  return p;
}

}  // namespace fusion_sos
