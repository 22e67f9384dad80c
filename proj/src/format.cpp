#include "flatstat/format.hpp"

#include <sstream>

#include "flatstat/error.hpp"

namespace flatstat {

OutputFormat parse_format(std::string_view name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::Parse, "unknown format: " + std::string(name));
}

nlohmann::json qpoly_to_json(const QPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"var", "q"}, {"coeffs", std::move(coeffs)}};
}

QPolynomial qpoly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 2 || !j.contains("var") || !j.contains("coeffs") || j["var"] != "q" ||
      !j["coeffs"].is_array())
    throw Error(ErrorCode::Parse, "not a q-polynomial record");
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw Error(ErrorCode::Parse, "coefficient is not a decimal string");
    const std::string& text = c.get_ref<const std::string&>();
    const std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
    if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos)
      throw Error(ErrorCode::Parse, "malformed coefficient: " + text);
    coeffs.emplace_back(text);
  }
  return QPolynomial(std::move(coeffs));
}

std::string qpoly_to_csv(const QPolynomial& p) {
  std::ostringstream os;
  os << "power,coeff\n";
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) os << i << ',' << p.coeff(i).str() << '\n';
  return os.str();
}

nlohmann::json triangle_to_json(const DistTriangle& t) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : t.cells()) cells.push_back({{"n", c.n}, {"m", c.m}, {"k", c.k}, {"count", c.count.str()}});
  return {{"d", t.d()}, {"cells", std::move(cells)}};
}

nlohmann::json output_record(nlohmann::json command, nlohmann::json payload) {
  return {{"schema_version", kSchemaVersion}, {"command", std::move(command)}, {"payload", std::move(payload)}};
}

}  // namespace flatstat
