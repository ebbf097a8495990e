#include "detail/assignment.hpp"

#include <algorithm>

namespace troprank::detail {

std::optional<std::vector<std::size_t>> second_matching(const std::vector<char>& tight,
                                                        const std::vector<std::size_t>& sigma) {
  const std::size_t n = sigma.size();
  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < n; ++i) owner[sigma[i]] = i;

  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> color(n, 0);
  std::vector<std::size_t> parent(n, n), next_col(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::size_t> stack{root};
    color[root] = 1;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      bool pushed = false;
      while (next_col[i] < n) {
        const std::size_t j = next_col[i]++;
        if (j == sigma[i] || !tight[i * n + j]) continue;
        const std::size_t k = owner[j];
        if (color[k] == 1) {
          // cycle k -> ... -> i -> k; each row on it takes its successor's column
          std::vector<std::size_t> cycle;
          for (std::size_t t = i; t != k; t = parent[t]) cycle.push_back(t);
          cycle.push_back(k);
          std::reverse(cycle.begin(), cycle.end());
          auto sigma2 = sigma;
          for (std::size_t t = 0; t < cycle.size(); ++t)
            sigma2[cycle[t]] = sigma[cycle[(t + 1) % cycle.size()]];
          return sigma2;
        }
        if (color[k] == 0) {
          color[k] = 1;
          parent[k] = i;
          stack.push_back(k);
          pushed = true;
          break;
        }
      }
      if (!pushed) {
        color[i] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

namespace {

bool augment(const std::vector<char>& tight, std::size_t n, std::size_t i, const std::vector<char>& row_ok,
             const std::vector<char>& col_ok, std::vector<std::size_t>& match_col, std::vector<char>& seen) {
  for (std::size_t j = 0; j < n; ++j) {
    if (!col_ok[j] || !tight[i * n + j] || seen[j]) continue;
    seen[j] = 1;
    if (match_col[j] == n || augment(tight, n, match_col[j], row_ok, col_ok, match_col, seen)) {
      match_col[j] = i;
      return true;
    }
  }
  return false;
}

bool has_perfect_matching(const std::vector<char>& tight, std::size_t n, const std::vector<char>& row_ok,
                          const std::vector<char>& col_ok) {
  std::vector<std::size_t> match_col(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!row_ok[i]) continue;
    std::vector<char> seen(n, 0);
    if (!augment(tight, n, i, row_ok, col_ok, match_col, seen)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> lex_smallest_matching(const std::vector<char>& tight, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::vector<char> row_ok(n, 1), col_ok(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    row_ok[i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!col_ok[j] || !tight[i * n + j]) continue;
      col_ok[j] = 0;
      if (has_perfect_matching(tight, n, row_ok, col_ok)) {
        perm[i] = j;
        break;
      }
      col_ok[j] = 1;
    }
  }
  return perm;
}

}  // namespace troprank::detail
