#pragma once

#include <istream>
#include <optional>
#include <string>

#include "anglegauge/linalg.hpp"

namespace anglegauge {

enum class MatrixFormat { csv, json };

/// CSV: comma-separated decimal floats, one row per line, blank lines and
/// lines starting with '#' ignored.
Matrix parse_matrix_csv(std::istream& in);

/// JSON object {"rows": m, "cols": n, "data": [row-major numbers]}.
Matrix parse_matrix_json(const std::string& text);

/// Reads a file; format inferred from the extension when not given
/// (".json" -> json, otherwise csv).
Matrix parse_matrix(const std::string& path,
                    std::optional<MatrixFormat> format = std::nullopt);

/// Canonical JSON serialization; doubles use the shortest round-trip form.
std::string canonical_json(const Matrix& m);

/// Hex FNV-1a 64 digest of the canonical serialization.
std::string matrix_digest(const Matrix& m);

}  // namespace anglegauge
