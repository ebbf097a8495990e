#include "troprank/core.hpp"

#include <algorithm>
#include <string>

#include "troprank/errors.hpp"

namespace troprank {

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix must have at least one row and one column");
  if (data_.size() != rows_ * cols_) throw ShapeError("entry count does not match rows x cols");
  for (auto& q : data_) q.canonicalize();
}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix must have at least one row and one column");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    for (const auto& q : r) {
      data_.push_back(q);
      data_.back().canonicalize();
    }
  }
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) throw ShapeError("matrix must have at least one row and one column");
  std::vector<Rational> data;
  data.reserve(rows.size() * rows.front().size());
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ShapeError("ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return TropMatrix(rows.size(), rows.front().size(), std::move(data));
}

TropMatrix TropMatrix::filled(std::size_t rows, std::size_t cols, const Rational& value) {
  return TropMatrix(rows, cols, std::vector<Rational>(rows * cols, value));
}

TropVector TropMatrix::row(std::size_t i) const {
  return TropVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

TropVector TropMatrix::column(std::size_t j) const {
  TropVector c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

TropMatrix TropMatrix::transpose() const {
  std::vector<Rational> t;
  t.reserve(data_.size());
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) t.push_back((*this)(i, j));
  return TropMatrix(cols_, rows_, std::move(t));
}

TropMatrix TropMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  std::vector<Rational> s;
  s.reserve(rows.size() * cols.size());
  for (auto i : rows) {
    for (auto j : cols) {
      if (i >= rows_ || j >= cols_) throw ShapeError("submatrix index out of range");
      s.push_back((*this)(i, j));
    }
  }
  return TropMatrix(rows.size(), cols.size(), std::move(s));
}

TropMatrix TropMatrix::select_columns(std::span<const std::size_t> cols) const {
  std::vector<std::size_t> all(rows_);
  for (std::size_t i = 0; i < rows_; ++i) all[i] = i;
  return submatrix(all, cols);
}

TropMatrix TropMatrix::shift_row(std::size_t i, const Rational& c) const {
  auto d = data_;
  for (std::size_t j = 0; j < cols_; ++j) d[i * cols_ + j] += c;
  return TropMatrix(rows_, cols_, std::move(d));
}

TropMatrix TropMatrix::shift_column(std::size_t j, const Rational& c) const {
  auto d = data_;
  for (std::size_t i = 0; i < rows_; ++i) d[i * cols_ + j] += c;
  return TropMatrix(rows_, cols_, std::move(d));
}

TropMatrix trop_matmul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("trop_matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + ")");
  }
  std::vector<Rational> out;
  out.reserve(a.rows() * b.cols());
  Rational cand;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational best = a(i, 0) + b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k) {
        cand = a(i, k) + b(k, j);
        if (cand < best) best = cand;
      }
      out.push_back(std::move(best));
    }
  }
  return TropMatrix(a.rows(), b.cols(), std::move(out));
}

TropMatrix trop_add(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("trop_add: shapes differ");
  std::vector<Rational> out;
  out.reserve(a.rows() * a.cols());
  for (std::size_t k = 0; k < a.entries().size(); ++k) out.push_back(std::min(a.entries()[k], b.entries()[k]));
  return TropMatrix(a.rows(), a.cols(), std::move(out));
}

TropVector trop_apply(const TropMatrix& m, const TropVector& x) {
  if (x.size() != m.cols()) throw ShapeError("trop_apply: vector length differs from column count");
  TropVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational best = m(i, 0) + x[0];
    for (std::size_t j = 1; j < m.cols(); ++j) best = std::min<Rational>(best, m(i, j) + x[j]);
    out[i] = best;
  }
  return out;
}

TropVector normalize_projective(const TropVector& v) {
  if (v.empty()) throw DomainError("normalize_projective: empty vector");
  Rational lo = *std::min_element(v.begin(), v.end());
  TropVector out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c - lo);
  return out;
}

std::optional<RankOneFactor> rank_one_factor(const TropMatrix& m) {
  RankOneFactor f;
  f.y = m.row(0);
  for (std::size_t j = m.cols(); j-- > 0;) f.y[j] -= m(0, 0);
  f.x.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) f.x[i] = m(i, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (f.x[i] + f.y[j] != m(i, j)) return std::nullopt;
  return f;
}

TropMatrix classical_identity(std::size_t n) {
  if (n == 0) throw DomainError("classical_identity: n must be positive");
  std::vector<Rational> d(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 1;
  return TropMatrix(n, n, std::move(d));
}

}  // namespace troprank
