#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fusion_sos/scalar.hpp"

namespace fusion_sos {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix column(std::span<const Scalar> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& factor);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, const Scalar& factor);
Matrix operator*(const Scalar& factor, Matrix a);

/// Throws MathError(ShapeMismatch) unless a.cols() == b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// (A ⊗ B)[i·rB + k, j·cB + l] = A[i,j]·B[k,l].
Matrix kron(const Matrix& a, const Matrix& b);

Matrix power(const Matrix& a, unsigned exponent);

/// a·b − b·a.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Exact solution of A·x = b (b may have several columns). A may be square or
/// overdetermined; a full-rank square subsystem is solved and the remaining
/// rows are checked. Throws MathError(Singular) on rank deficiency and
/// MathError(Inconsistent) when a leftover row is violated.
Matrix solve_exact(const Matrix& a, const Matrix& b);

Scalar determinant(const Matrix& a);

std::size_t rank(const Matrix& a);

std::string to_string(const Matrix& a);

}  // namespace fusion_sos
