#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcorr/series.hpp"

namespace dcorr::tools {

using nlohmann::json;

/// Values of u_j = t_j^{½} used for a numeric evaluation.
struct EvalPoint {
  std::vector<std::string> names;
  std::vector<BigRational> values;
};

/// {"variables", "order_x2", "terms": [{"q_x2", "coeff": {"num", "den"}}]}.
/// An exact series has "order_x2": null. A point adds "point": [{"name", "sqrt"}].
json to_json(const HalfSeries& s, const std::optional<EvalPoint>& point = std::nullopt);

/// Inverse of to_json. Variables whose name starts with 'z' are z-type.
/// Malformed documents raise UsageError.
HalfSeries series_from_json(const json& doc);
std::optional<EvalPoint> point_from_json(const json& doc);

json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const VarTablePtr& vars, const json& terms);

/// One line per term with true exponents, e.g. "q^{3/2}: 2*t1".
std::string to_text(const HalfSeries& s, const std::optional<EvalPoint>& point = std::nullopt);

/// "q^{3/2}", "q^{0}".
std::string q_power(int q_x2);

}  // namespace dcorr::tools
