#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "sa/errors.hpp"
#include "sa/matrix.hpp"

namespace sa {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline double parse_double(std::string_view token, std::int64_t row, std::int64_t col,
                           const std::filesystem::path& path) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw FormatError(path.string() + ": unparsable value '" + std::string(token) + "' at (" +
                      std::to_string(row) + ", " + std::to_string(col) + ")");
  return value;
}

inline std::int64_t parse_int(std::string_view token, std::int64_t row,
                              const std::filesystem::path& path) {
  token = trim(token);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw FormatError(path.string() + ": unparsable label '" + std::string(token) + "' at row " +
                      std::to_string(row));
  return value;
}

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path.string());
  return in;
}

}  // namespace detail

// One trace per line, comma-delimited, '.' decimal separator, no header row
// unless skip_header is set.
inline Matrix read_csv_matrix(const std::filesystem::path& path, bool skip_header = false) {
  std::ifstream in = detail::open_input(path);
  std::vector<double> values;
  std::int64_t rows = 0;
  std::int64_t cols = -1;
  std::string line;
  if (skip_header) std::getline(in, line);
  while (std::getline(in, line)) {
    const std::string_view lv = detail::trim(line);
    if (lv.empty()) continue;
    std::int64_t col = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = lv.find(',', start);
      const std::string_view token =
          comma == std::string_view::npos ? lv.substr(start) : lv.substr(start, comma - start);
      values.push_back(detail::parse_double(token, rows, col, path));
      ++col;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cols < 0) {
      cols = col;
    } else if (col != cols) {
      throw DimensionMismatchError("dimension mismatch between rows: row " + std::to_string(rows) +
                                   " has " + std::to_string(col) + " columns, expected " +
                                   std::to_string(cols) + " (" + path.string() + ")");
    }
    ++rows;
  }
  if (rows == 0) throw FormatError(path.string() + ": no data rows");
  Matrix m(rows, cols);
  std::copy(values.begin(), values.end(), m.data());
  return m;
}

// Single-column label file, one integer per line.
inline std::vector<std::int64_t> read_csv_labels(const std::filesystem::path& path,
                                                 bool skip_header = false) {
  std::ifstream in = detail::open_input(path);
  std::vector<std::int64_t> labels;
  std::string line;
  if (skip_header) std::getline(in, line);
  while (std::getline(in, line)) {
    const std::string_view lv = detail::trim(line);
    if (lv.empty()) continue;
    labels.push_back(detail::parse_int(lv, static_cast<std::int64_t>(labels.size()), path));
  }
  if (labels.empty()) throw FormatError(path.string() + ": no labels");
  return labels;
}

inline void write_csv_matrix(const Matrix& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path.string());
  char buf[32];
  for (std::int64_t r = 0; r < m.rows(); ++r) {
    for (std::int64_t c = 0; c < m.cols(); ++c) {
      const int n = std::snprintf(buf, sizeof(buf), "%.17g", m(r, c));
      out.write(buf, n);
      out.put(c + 1 == m.cols() ? '\n' : ',');
    }
  }
}

inline void write_csv_labels(const std::vector<std::int64_t>& labels,
                             const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path.string());
  for (const std::int64_t l : labels) out << l << '\n';
}

}  // namespace sa
