#include "fusion_sos/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "fusion_sos/error.hpp"

namespace fusion_sos {

Polynomial::Polynomial(std::vector<Scalar> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int power, const Scalar& c) {
  std::vector<Scalar> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Scalar& root) { return Polynomial({-root, 1}); }

Polynomial Polynomial::from_roots(std::span<const Scalar> roots) {
  Polynomial p = constant(1);
  for (const auto& r : roots) p *= linear(r);
  return p;
}

Scalar Polynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coefficients_[power];
}

std::vector<Scalar> Polynomial::coefficient_vector(int bound) const {
  if (degree() > bound) {
    throw MathError(ErrorKind::LossyTruncation, "degree " + std::to_string(degree()) +
                                                    " exceeds bound " + std::to_string(bound));
  }
  std::vector<Scalar> v(bound + 1);
  std::copy(coefficients_.begin(), coefficients_.end(), v.begin());
  return v;
}

Scalar Polynomial::evaluate(const Scalar& z) const {
  Scalar acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] -= other.coefficients_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Scalar> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& factor) {
  for (auto& c : coefficients_) c *= factor;
  trim();
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
Polynomial operator*(Polynomial a, const Scalar& factor) { return a *= factor; }
Polynomial operator*(const Scalar& factor, Polynomial a) { return a *= factor; }

Polynomial poly_shift(const Polynomial& p, const Scalar& h) {
  // Horner in the shifted variable: p(z+h) = (...(c_d (z+h) + c_{d-1})(z+h) ...).
  Polynomial step({h, 1});
  Polynomial acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= step;
    acc += Polynomial::constant(*it);
  }
  return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw MathError(ErrorKind::Singular, "polynomial division by zero");
  std::vector<Scalar> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Scalar> quo(a.degree() - db + 1);
  const Scalar& lead = b.coefficients().back();
  for (int k = a.degree() - db; k >= 0; --k) {
    Scalar q = rem[k + db] / lead;
    quo[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.coefficients()[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial lagrange_interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys) {
  if (xs.size() != ys.size()) throw MathError(ErrorKind::ShapeMismatch, "node/value count");
  Polynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis = Polynomial::constant(1);
    Scalar denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw MathError(ErrorKind::Singular, "repeated interpolation node");
      basis *= Polynomial::linear(xs[j]);
      denom *= xs[i] - xs[j];
    }
    result += basis * Scalar(ys[i] / denom);
  }
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Scalar& c = p.coefficients()[k];
    if (c == 0) continue;
    os << (first ? "" : " + ") << "(" << to_string(c) << ")";
    if (k >= 1) os << "*z";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace fusion_sos
