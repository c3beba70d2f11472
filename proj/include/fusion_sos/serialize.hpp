#pragma once

#include <json.hpp>

#include "fusion_sos/matrix.hpp"
#include "fusion_sos/polynomial.hpp"

namespace fusion_sos {

/// Rationals travel as "P/Q" (or "P") strings so nothing is rounded.
nlohmann::json to_json(const Scalar& x);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Polynomial& p);

/// Accepts "P/Q" strings and JSON integers.
Scalar scalar_from_json(const nlohmann::json& j);
/// Expects {"rows": R, "cols": C, "entries": [[...], ...]}.
Matrix matrix_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace fusion_sos
