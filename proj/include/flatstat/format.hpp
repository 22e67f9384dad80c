#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "flatstat/ddescent.hpp"
#include "flatstat/polynomial.hpp"

namespace flatstat {

inline constexpr const char* kSchemaVersion = "1.0";

enum class OutputFormat { Human, Json, Csv };

/// "human", "json", "csv"; Error(Parse) otherwise.
OutputFormat parse_format(std::string_view name);

/// {"var":"q","coeffs":["c0","c1",...]}, decimal-string coefficients.
nlohmann::json qpoly_to_json(const QPolynomial& p);
/// Inverse of qpoly_to_json. Throws Error(Parse) on anything else.
QPolynomial qpoly_from_json(const nlohmann::json& j);

/// "power,coeff" header then one row per nonzero coefficient.
std::string qpoly_to_csv(const QPolynomial& p);

/// {"d":d,"cells":[{"n":..,"m":..,"k":..,"count":"..."},...]}.
nlohmann::json triangle_to_json(const DistTriangle& t);

/// {"schema_version":..., "command":command, "payload":payload}.
nlohmann::json output_record(nlohmann::json command, nlohmann::json payload);

}  // namespace flatstat
