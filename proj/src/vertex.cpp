#include "fusion_sos/vertex.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "fusion_sos/error.hpp"

namespace fusion_sos {

ModelParams ModelParams::from_w(const Scalar& alpha, const Scalar& w, const Scalar& skew) {
  ModelParams p;
  p.alpha = alpha;
  p.s = w + skew;
  p.t = w - skew;
  return p;
}

void validate(const ModelParams& params) {
  if (params.alpha == 0) throw std::invalid_argument("alpha must be nonzero");
}

Matrix r7v(const Scalar& u, const ModelParams& params) {
  Matrix r(4, 4);
  r(0, 0) = u + 1;
  r(1, 1) = u;
  r(1, 2) = 1;
  r(2, 1) = 1;
  r(2, 2) = u;
  r(3, 3) = u + 1;
  r(3, 0) = params.alpha * params.alpha * u * (u + 1);
  return r;
}

Matrix permutation_op(std::size_t d) {
  Matrix p(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) p(j * d + i, i * d + j) = 1;
  }
  return p;
}

Scalar check_degeneracy(const ModelParams& params) {
  Matrix r = r7v(-1, params);
  Matrix base = Matrix::identity(4) - permutation_op(2);
  // Locate the proportionality constant on the first nonzero entry of I − P.
  Scalar c = r(0, 0);
  bool have = false;
  for (std::size_t i = 0; i < 4 && !have; ++i) {
    for (std::size_t j = 0; j < 4 && !have; ++j) {
      if (base(i, j) != 0) {
        c = r(i, j) / base(i, j);
        have = true;
      }
    }
  }
  if (!(r == base * c)) {
    throw MathError(ErrorKind::NotProportional, "r7v(-1) is not a multiple of I-P");
  }
  return c;
}

Matrix embed_operator(const Matrix& op, std::span<const std::size_t> dims,
                      std::span<const std::size_t> sites) {
  const std::size_t nf = dims.size();
  std::vector<std::size_t> stride(nf, 1);
  for (std::size_t k = nf; k-- > 1;) stride[k - 1] = stride[k] * dims[k];
  const std::size_t total = nf == 0 ? 1 : stride[0] * dims[0];
  std::size_t sub = 1;
  for (auto s : sites) sub *= dims[s];
  if (op.rows() != sub || op.cols() != sub) {
    throw MathError(ErrorKind::ShapeMismatch, "operator does not match its sites");
  }

  // For each local index: offset it contributes to the global index.
  std::vector<std::size_t> offset(sub, 0);
  for (std::size_t li = 0; li < sub; ++li) {
    std::size_t rest = li;
    for (std::size_t k = sites.size(); k-- > 0;) {
      std::size_t d = dims[sites[k]];
      offset[li] += (rest % d) * stride[sites[k]];
      rest /= d;
    }
  }

  Matrix out(total, total);
  for (std::size_t col = 0; col < total; ++col) {
    std::size_t local = 0;
    std::size_t base = col;
    for (auto s : sites) {
      std::size_t digit = (col / stride[s]) % dims[s];
      local = local * dims[s] + digit;
      base -= digit * stride[s];
    }
    for (std::size_t li = 0; li < sub; ++li) {
      const Scalar& v = op(li, local);
      if (v != 0) out(base + offset[li], col) = v;
    }
  }
  return out;
}

bool check_ybe_vertex(const Matrix& r12, const Matrix& r13, const Matrix& r23,
                      const std::array<std::size_t, 3>& dims) {
  const std::size_t total = dims[0] * dims[1] * dims[2];
  for (const Matrix* m : {&r12, &r13, &r23}) {
    if (m->rows() != total || m->cols() != total) {
      throw MathError(ErrorKind::ShapeMismatch, "YBE operators must act on the full space");
    }
  }
  return r12 * r13 * r23 == r23 * r13 * r12;
}

bool check_ybe_vertex_local(const Matrix& r12, const Matrix& r13, const Matrix& r23,
                            const std::array<std::size_t, 3>& dims) {
  const std::array<std::size_t, 2> s12{0, 1}, s13{0, 2}, s23{1, 2};
  return check_ybe_vertex(embed_operator(r12, dims, s12), embed_operator(r13, dims, s13),
                          embed_operator(r23, dims, s23), dims);
}

}  // namespace fusion_sos
