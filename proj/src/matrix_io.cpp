#include "anglegauge/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace anglegauge {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& tok, std::size_t line, std::size_t col) {
  double value = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    std::ostringstream msg;
    msg << "line " << line << ", column " << col << ": cannot parse '" << tok
        << "' as a number";
    throw ParseError(msg.str());
  }
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "line " << line << ", column " << col << ": non-finite value";
    throw NonFiniteEntry(msg.str());
  }
  return value;
}

}  // namespace

Matrix parse_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<double> row;
    std::size_t col = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = t.find(',', start);
      const std::string tok =
          trim(t.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start));
      ++col;
      if (tok.empty()) {
        std::ostringstream msg;
        msg << "line " << lineno << ", column " << col << ": empty field";
        throw ParseError(msg.str());
      }
      row.push_back(parse_double(tok, lineno, col));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      std::ostringstream msg;
      msg << "line " << lineno << " has " << row.size() << " values, expected "
          << rows.front().size();
      throw RaggedRows(msg.str());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no matrix rows found");
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<double> data;
  data.reserve(m * n);
  for (const auto& r : rows) data.insert(data.end(), r.begin(), r.end());
  return Matrix(m, n, std::move(data));
}

Matrix parse_matrix_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    throw ParseError("matrix JSON must be an object with rows, cols, data");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
    throw ParseError("rows and cols must be nonnegative integers");
  const std::size_t rows = j["rows"].get<std::size_t>();
  const std::size_t cols = j["cols"].get<std::size_t>();
  if (!j["data"].is_array()) throw ParseError("data must be an array");
  const auto& arr = j["data"];
  if (arr.size() != rows * cols) {
    std::ostringstream msg;
    msg << "data has " << arr.size() << " entries, expected " << rows * cols;
    throw ShapeMismatch(msg.str());
  }
  std::vector<double> data;
  data.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number())
      throw ParseError("data entry " + std::to_string(i) + " is not a number");
    const double v = arr[i].get<double>();
    if (!std::isfinite(v))
      throw NonFiniteEntry("data entry " + std::to_string(i) + " is non-finite");
    data.push_back(v);
  }
  if (rows == 0 || cols == 0) throw ParseError("rows and cols must be >= 1");
  return Matrix(rows, cols, std::move(data));
}

Matrix parse_matrix(const std::string& path,
                    std::optional<MatrixFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  MatrixFormat fmt = format.value_or(
      path.size() >= 5 && path.substr(path.size() - 5) == ".json"
          ? MatrixFormat::json
          : MatrixFormat::csv);
  if (fmt == MatrixFormat::csv) return parse_matrix_csv(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string canonical_json(const Matrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = m.data();
  return j.dump();
}

std::string matrix_digest(const Matrix& m) {
  const std::string s = canonical_json(m);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace anglegauge
