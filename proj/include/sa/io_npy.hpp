#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "sa/errors.hpp"
#include "sa/matrix.hpp"

// Reader/writer for the .npy array-interchange format, version 1.0.
// Traces are '<f8' 2-D C-order arrays; labels are '<i8' 1-D arrays.

namespace sa {

namespace detail {

struct NpyHeader {
  std::string descr;
  bool fortran_order = false;
  std::vector<std::int64_t> shape;
};

inline NpyHeader read_npy_header(std::ifstream& in, const std::filesystem::path& path) {
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, "\x93NUMPY", 6) != 0)
    throw FormatError(path.string() + ": not an npy file (bad magic)");
  const unsigned char major = static_cast<unsigned char>(magic[6]);
  const unsigned char minor = static_cast<unsigned char>(magic[7]);
  if (major != 1)
    throw FormatError(path.string() + ": unsupported npy version " + std::to_string(major) + "." +
                      std::to_string(minor));
  unsigned char len_bytes[2];
  in.read(reinterpret_cast<char*>(len_bytes), 2);
  if (!in) throw FormatError(path.string() + ": truncated npy header");
  const std::size_t header_len =
      static_cast<std::size_t>(len_bytes[0]) | (static_cast<std::size_t>(len_bytes[1]) << 8);
  std::string header(header_len, '\0');
  in.read(header.data(), static_cast<std::streamsize>(header_len));
  if (!in) throw FormatError(path.string() + ": truncated npy header");

  NpyHeader h;
  const std::size_t descr_pos = header.find("'descr'");
  const std::size_t order_pos = header.find("'fortran_order'");
  const std::size_t shape_pos = header.find("'shape'");
  if (descr_pos == std::string::npos || order_pos == std::string::npos ||
      shape_pos == std::string::npos)
    throw FormatError(path.string() + ": malformed npy header dict");

  const std::size_t dq0 = header.find('\'', descr_pos + 7);
  const std::size_t dq1 = header.find('\'', dq0 + 1);
  h.descr = header.substr(dq0 + 1, dq1 - dq0 - 1);

  const std::size_t colon = header.find(':', order_pos);
  std::size_t v = colon + 1;
  while (v < header.size() && header[v] == ' ') ++v;
  h.fortran_order = header.compare(v, 4, "True") == 0;

  const std::size_t open = header.find('(', shape_pos);
  const std::size_t close = header.find(')', open);
  if (open == std::string::npos || close == std::string::npos)
    throw FormatError(path.string() + ": malformed npy shape");
  std::string dims = header.substr(open + 1, close - open - 1);
  std::size_t start = 0;
  while (start < dims.size()) {
    std::size_t end = dims.find(',', start);
    if (end == std::string::npos) end = dims.size();
    const std::string tok = dims.substr(start, end - start);
    bool has_digit = false;
    std::int64_t value = 0;
    for (const char ch : tok) {
      if (ch >= '0' && ch <= '9') {
        value = value * 10 + (ch - '0');
        has_digit = true;
      } else if (ch != ' ') {
        throw FormatError(path.string() + ": malformed npy shape");
      }
    }
    if (has_digit) h.shape.push_back(value);
    start = end + 1;
  }
  return h;
}

inline void write_npy_header(std::ofstream& out, const std::string& descr,
                             const std::vector<std::int64_t>& shape) {
  std::string dict = "{'descr': '" + descr + "', 'fortran_order': False, 'shape': (";
  for (std::size_t i = 0; i < shape.size(); ++i) dict += std::to_string(shape[i]) + ", ";
  if (shape.size() > 1) dict.erase(dict.size() - 2, 1);  // "(a, b, )" -> "(a, b)"
  dict += "), }";
  const std::size_t unpadded = 10 + dict.size() + 1;
  const std::size_t padded = (unpadded + 63) / 64 * 64;
  dict.append(padded - unpadded, ' ');
  dict += '\n';
  const std::size_t header_len = dict.size();
  out.write("\x93NUMPY\x01\x00", 8);
  const unsigned char len_bytes[2] = {static_cast<unsigned char>(header_len & 0xff),
                                      static_cast<unsigned char>((header_len >> 8) & 0xff)};
  out.write(reinterpret_cast<const char*>(len_bytes), 2);
  out.write(dict.data(), static_cast<std::streamsize>(dict.size()));
}

}  // namespace detail

inline Matrix read_npy_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  const detail::NpyHeader h = detail::read_npy_header(in, path);
  if (h.descr != "<f8")
    throw FormatError(path.string() + ": expected dtype '<f8', got '" + h.descr + "'");
  if (h.fortran_order) throw FormatError(path.string() + ": fortran_order arrays not supported");
  if (h.shape.size() != 2)
    throw FormatError(path.string() + ": expected a 2-D array, got " +
                      std::to_string(h.shape.size()) + "-D");
  Matrix m(h.shape[0], h.shape[1]);
  in.read(reinterpret_cast<char*>(m.data()), static_cast<std::streamsize>(m.size() * 8));
  if (!in) throw FormatError(path.string() + ": truncated npy payload");
  return m;
}

inline std::vector<std::int64_t> read_npy_labels(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  const detail::NpyHeader h = detail::read_npy_header(in, path);
  if (h.descr != "<i8")
    throw FormatError(path.string() + ": expected dtype '<i8', got '" + h.descr + "'");
  if (h.fortran_order) throw FormatError(path.string() + ": fortran_order arrays not supported");
  if (h.shape.size() != 1)
    throw FormatError(path.string() + ": expected a 1-D label array, got " +
                      std::to_string(h.shape.size()) + "-D");
  std::vector<std::int64_t> labels(static_cast<std::size_t>(h.shape[0]));
  in.read(reinterpret_cast<char*>(labels.data()),
          static_cast<std::streamsize>(labels.size() * 8));
  if (!in) throw FormatError(path.string() + ": truncated npy payload");
  return labels;
}

inline void write_npy_matrix(const Matrix& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path.string());
  detail::write_npy_header(out, "<f8", {m.rows(), m.cols()});
  out.write(reinterpret_cast<const char*>(m.data()), static_cast<std::streamsize>(m.size() * 8));
}

inline void write_npy_labels(const std::vector<std::int64_t>& labels,
                             const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path.string());
  detail::write_npy_header(out, "<i8", {static_cast<std::int64_t>(labels.size())});
  out.write(reinterpret_cast<const char*>(labels.data()),
            static_cast<std::streamsize>(labels.size() * 8));
}

}  // namespace sa
