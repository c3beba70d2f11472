#include "fusion_sos/serialize.hpp"

#include <stdexcept>

#include "fusion_sos/error.hpp"

namespace fusion_sos {

nlohmann::json to_json(const Scalar& x) { return to_string(x); }

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return {{"degree", p.degree()}, {"coefficients", std::move(coeffs)}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw std::invalid_argument("rational must be a \"P/Q\" string or an integer");
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows) throw MathError(ErrorKind::ShapeMismatch, "row count");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw MathError(ErrorKind::ShapeMismatch, "column count");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(entries[i][k]);
  }
  return m;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<Scalar> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(scalar_from_json(c));
  return Polynomial(std::move(coeffs));
}

}  // namespace fusion_sos
