#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fusion_sos/scalar.hpp"

namespace fusion_sos {

/// Univariate polynomial in z with rational coefficients, lowest power first.
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);
  Polynomial(std::initializer_list<Scalar> coefficients)
      : Polynomial(std::vector<Scalar>(coefficients)) {}

  static Polynomial constant(const Scalar& c);
  static Polynomial monomial(int power, const Scalar& c = 1);
  /// z − root.
  static Polynomial linear(const Scalar& root);
  /// ∏ (z − r).
  static Polynomial from_roots(std::span<const Scalar> roots);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Scalar coeff(int power) const;
  const std::vector<Scalar>& coefficients() const { return coefficients_; }

  /// Coefficients padded to length bound+1. Throws MathError(LossyTruncation)
  /// if degree() > bound.
  std::vector<Scalar> coefficient_vector(int bound) const;

  Scalar evaluate(const Scalar& z) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& factor);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  void trim();

  std::vector<Scalar> coefficients_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Scalar& factor);
Polynomial operator*(const Scalar& factor, Polynomial a);

/// p(z + h).
Polynomial poly_shift(const Polynomial& p, const Scalar& h);

/// Quotient and remainder. Throws MathError(Singular) for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]).
/// Throws MathError(Singular) on repeated nodes.
Polynomial lagrange_interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys);

std::string to_string(const Polynomial& p);

}  // namespace fusion_sos
