#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "detail/exact_view.hpp"

namespace troprank::detail {

template <class T>
struct Assignment {
  std::vector<std::size_t> row_to_col;
  std::vector<T> u;
  std::vector<T> v;
};

// Shortest augmenting path Hungarian method on a square cost matrix. Duals satisfy u_i + v_j <= a_ij
// with equality on the returned permutation.
template <class T>
Assignment<T> solve_assignment(const DenseView<T>& a) {
  const std::size_t n = a.rows;
  std::vector<T> u(n + 1, T(0)), v(n + 1, T(0)), minv(n + 1, T(0));
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1), fresh(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(fresh.begin(), fresh.end(), 1);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      bool have_delta = false;
      T delta(0);
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        T cur = a(i0 - 1, j - 1) - u[i0] - v[j];
        if (fresh[j] || cur < minv[j]) {
          minv[j] = cur;
          fresh[j] = 0;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          have_delta = true;
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Assignment<T> out;
  out.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.row_to_col[p[j] - 1] = j - 1;
  out.u.assign(u.begin() + 1, u.end());
  out.v.assign(v.begin() + 1, v.end());
  return out;
}

// tight[i*n+j] iff u_i + v_j == a_ij.
template <class T>
std::vector<char> tight_graph(const DenseView<T>& a, const std::vector<T>& u, const std::vector<T>& v) {
  const std::size_t n = a.rows;
  std::vector<char> tight(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tight[i * n + j] = (u[i] + v[j] == a(i, j)) ? 1 : 0;
  return tight;
}

// A perfect matching of the tight graph other than sigma, found as an alternating cycle: row i points
// to the row matched with any tight column j != sigma(i).
std::optional<std::vector<std::size_t>> second_matching(const std::vector<char>& tight,
                                                        const std::vector<std::size_t>& sigma);

// Lexicographically smallest perfect matching of the tight graph (one exists: sigma).
std::vector<std::size_t> lex_smallest_matching(const std::vector<char>& tight, std::size_t n);

template <class T>
bool is_singular_view(const DenseView<T>& a) {
  const std::size_t n = a.rows;
  if (n == 1) return false;
  if (n == 2) return a(0, 0) + a(1, 1) == a(0, 1) + a(1, 0);
  auto as = solve_assignment(a);
  return second_matching(tight_graph(a, as.u, as.v), as.row_to_col).has_value();
}

}  // namespace troprank::detail
