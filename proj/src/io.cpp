#include "feprob/io.hpp"

#include <cstdio>

#include "json.hpp"

#include "feprob/errors.hpp"

namespace feprob {

namespace {

nlohmann::json parse_or_usage_error(const std::string& text,
                                    const char* what) {
  nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
  if (parsed.is_discarded())
    throw UsageError(std::string("malformed JSON in ") + what);
  return parsed;
}

} // namespace

SimplexGeometry simplex_from_json_text(const std::string& text) {
  const nlohmann::json parsed = parse_or_usage_error(text, "vertices input");
  if (!parsed.is_object() || !parsed.contains("vertices") ||
      !parsed["vertices"].is_array())
    throw UsageError("vertices input must be {\"vertices\": [[...], ...]}");
  std::vector<std::vector<double>> vertices;
  for (const auto& row : parsed["vertices"]) {
    if (!row.is_array()) throw UsageError("each vertex must be an array");
    std::vector<double> vertex;
    for (const auto& entry : row) {
      if (!entry.is_number()) throw UsageError("vertex entries must be numbers");
      vertex.push_back(entry.get<double>());
    }
    vertices.push_back(std::move(vertex));
  }
  return simplex_geometry(vertices);
}

std::unique_ptr<SeminormProvider> provider_from_json_text(
    const std::string& text) {
  const nlohmann::json parsed = parse_or_usage_error(text, "provider input");
  if (!parsed.is_object() || !parsed.contains("type") ||
      !parsed["type"].is_string())
    throw UsageError("provider input must carry a string \"type\"");
  const std::string type = parsed["type"].get<std::string>();
  if (type == "geometric") {
    if (!parsed.contains("c") || !parsed["c"].is_number() ||
        !parsed.contains("rho") || !parsed["rho"].is_number())
      throw UsageError("geometric provider needs numeric \"c\" and \"rho\"");
    return std::make_unique<GeometricSeminormProvider>(
        parsed["c"].get<double>(), parsed["rho"].get<double>());
  }
  if (type == "table") {
    if (!parsed.contains("values") || !parsed["values"].is_array())
      throw UsageError("table provider needs a \"values\" array");
    std::vector<double> values;
    for (const auto& entry : parsed["values"]) {
      if (!entry.is_number())
        throw UsageError("table values must be numbers");
      values.push_back(entry.get<double>());
    }
    return std::make_unique<TableSeminormProvider>(std::move(values));
  }
  throw UsageError("unknown provider type \"" + type +
                   "\" (expected geometric or table)");
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_field(fields[i]);
  }
  out_ << '\n';
}

} // namespace feprob
