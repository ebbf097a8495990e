#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "troprank/rational.hpp"

namespace troprank {

/// Dense d x n matrix of exact rationals under (min, +). Immutable; entry (i, j) is row i, column j.
class TropMatrix {
 public:
  TropMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);
  TropMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static TropMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static TropMatrix filled(std::size_t rows, std::size_t cols, const Rational& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Rational> entries() const { return data_; }

  TropVector row(std::size_t i) const;
  TropVector column(std::size_t j) const;

  TropMatrix transpose() const;
  TropMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  TropMatrix select_columns(std::span<const std::size_t> cols) const;

  /// Copy with `c` added to every entry of row i (tropical scaling of a row).
  TropMatrix shift_row(std::size_t i, const Rational& c) const;
  TropMatrix shift_column(std::size_t j, const Rational& c) const;

  bool operator==(const TropMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

}  // namespace troprank
