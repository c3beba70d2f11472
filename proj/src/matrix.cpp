#include "fusion_sos/matrix.hpp"

#include <sstream>
#include <utility>

#include "fusion_sos/error.hpp"

namespace fusion_sos {

namespace {

std::string shape(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

// Row-reduces m in place (pivot = first nonzero entry in the column) and
// returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    Scalar inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Scalar f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw MathError(ErrorKind::ShapeMismatch, "entry count does not match shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MathError(ErrorKind::ShapeMismatch, "ragged rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(std::span<const Scalar> values) {
  return Matrix(values.size(), 1, std::vector<Scalar>(values.begin(), values.end()));
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw MathError(ErrorKind::ShapeMismatch, "trace of " + shape(*this));
  Scalar s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw MathError(ErrorKind::ShapeMismatch, shape(*this) + " + " + shape(other));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw MathError(ErrorKind::ShapeMismatch, shape(*this) + " - " + shape(other));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& factor) {
  for (auto& x : entries_) x *= factor;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, const Scalar& factor) { return a *= factor; }
Matrix operator*(const Scalar& factor, Matrix a) { return a *= factor; }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw MathError(ErrorKind::ShapeMismatch, shape(a) + " * " + shape(b));
  }
  Matrix c(a.rows(), b.cols());
  Scalar prod;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj == 0) continue;
        prod = aik * bkj;
        c(i, j) += prod;
      }
    }
  }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return c;
}

Matrix power(const Matrix& a, unsigned exponent) {
  if (!a.is_square()) throw MathError(ErrorKind::ShapeMismatch, "power of " + shape(a));
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix solve_exact(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw MathError(ErrorKind::ShapeMismatch, shape(a) + " x = " + shape(b));
  }
  const std::size_t n = a.cols();
  if (a.rows() < n) throw MathError(ErrorKind::Singular, "underdetermined system");

  Matrix aug(a.rows(), n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  auto pivots = row_reduce(aug, n);
  if (pivots.size() < n) throw MathError(ErrorKind::Singular, "rank " +
                                         std::to_string(pivots.size()) + " < " +
                                         std::to_string(n));
  for (std::size_t i = n; i < aug.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (aug(i, n + j) != 0) {
        throw MathError(ErrorKind::Inconsistent, "row " + std::to_string(i));
      }
    }
  }
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
  }
  return x;
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw MathError(ErrorKind::ShapeMismatch, "det of " + shape(a));
  Matrix m = a;
  Scalar det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      Scalar f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::size_t rank(const Matrix& a) {
  Matrix m = a;
  return row_reduce(m, m.cols()).size();
}

std::string to_string(const Matrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      os << (j ? ", " : "") << to_string(a(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace fusion_sos
