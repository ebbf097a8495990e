#pragma once

#include <cstddef>
#include <vector>

namespace troprank::detail {

// Advances c (a strictly increasing k-subset of {0..n-1}) to its lexicographic successor.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t t = k; t-- > 0;) {
    if (c[t] < n - k + t) {
      ++c[t];
      for (std::size_t s = t + 1; s < k; ++s) c[s] = c[s - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::vector<std::size_t>> all_combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t t = 0; t < k; ++t) c[t] = t;
  do out.push_back(c);
  while (next_combination(c, n));
  return out;
}

}  // namespace troprank::detail
