#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sa/errors.hpp"

namespace sa {

// Dense row-major matrix of 64-bit floats.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0.0) {
    if (rows < 0 || cols < 0) throw ValueError("matrix dimensions must be nonnegative");
  }

  Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = static_cast<std::int64_t>(rows.size());
    cols_ = rows_ > 0 ? static_cast<std::int64_t>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<std::size_t>(rows_ * cols_));
    std::int64_t r = 0;
    for (const auto& row : rows) {
      if (static_cast<std::int64_t>(row.size()) != cols_)
        throw DimensionMismatchError("dimension mismatch between rows: row " + std::to_string(r) +
                                     " has " + std::to_string(row.size()) + " columns, expected " +
                                     std::to_string(cols_));
      data_.insert(data_.end(), row.begin(), row.end());
      ++r;
    }
  }

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::int64_t r, std::int64_t c) {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }
  double operator()(std::int64_t r, std::int64_t c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }

  std::span<double> row(std::int64_t r) {
    return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<const double> row(std::int64_t r) const {
    return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)};
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace sa
