#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "troprank/matrix.hpp"

namespace troprank::detail {

/// Row-major scratch copy of a matrix in the value type a kernel runs on.
template <class T>
struct DenseView {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;

  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

/// M scaled by the lcm of its denominators, when every scaled entry fits below `bound` in magnitude.
struct IntegerImage {
  DenseView<std::int64_t> view;
  mpz_class scale;
};

inline constexpr std::int64_t kIntegerImageBound = std::int64_t{1} << 40;

std::optional<IntegerImage> integer_image(const TropMatrix& m, std::int64_t bound = kIntegerImageBound);
DenseView<Rational> rational_view(const TropMatrix& m);

template <class T>
DenseView<T> sub_view(const DenseView<T>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  DenseView<T> s{rows.size(), cols.size(), {}};
  s.a.reserve(rows.size() * cols.size());
  for (auto i : rows)
    for (auto j : cols) s.a.push_back(m(i, j));
  return s;
}

template <class T>
DenseView<T> transpose_view(const DenseView<T>& m) {
  DenseView<T> t{m.cols, m.rows, std::vector<T>(m.a.size())};
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

inline Rational to_rational(std::int64_t v, const mpz_class& scale) {
  Rational q{mpz_class(static_cast<long>(v)), scale};
  q.canonicalize();
  return q;
}
inline Rational to_rational(const Rational& v, const mpz_class& scale) {
  Rational q = v / Rational(scale);
  return q;
}

/// Runs `f(view, scale)` on the int64 image when it exists, else on the rational view with scale 1.
template <class F>
auto with_exact_view(const TropMatrix& m, F&& f) {
  if (auto img = integer_image(m)) return f(img->view, img->scale);
  return f(rational_view(m), mpz_class(1));
}

}  // namespace troprank::detail
