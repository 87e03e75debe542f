#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "feprob/accuracy.hpp"
#include "feprob/simplex.hpp"

namespace feprob {

/// Parses {"vertices": [[x...], ...]} and builds the geometry.
/// Structural problems are usage errors; degeneracy surfaces as a
/// geometry error from simplex_geometry.
SimplexGeometry simplex_from_json_text(const std::string& text);

/// Parses {"type":"geometric","c":...,"rho":...} or
/// {"type":"table","values":[...]} into a semi-norm provider.
std::unique_ptr<SeminormProvider> provider_from_json_text(
    const std::string& text);

/// Shortest round-trip-safe decimal form (%.17g).
std::string format_double(double value);

/// RFC-4180 style: quotes a field when it holds a comma, quote, CR or LF.
std::string csv_field(const std::string& raw);

/// Comma-separated rows with LF endings.
class CsvWriter {
public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(const std::vector<std::string>& fields);

private:
  std::ostream& out_;
};

} // namespace feprob
