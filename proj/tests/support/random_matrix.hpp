#pragma once

#include <random>

#include "troprank/matrix.hpp"

namespace troprank::testing {

// Entries p/q with p in [-range, range] and q in {1..max_den}.
inline Rational random_rational(std::mt19937_64& rng, long range = 6, long max_den = 3) {
  std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline TropMatrix random_matrix(std::mt19937_64& rng, std::size_t d, std::size_t n, long range = 6,
                                long max_den = 3) {
  std::vector<Rational> e;
  for (std::size_t k = 0; k < d * n; ++k) e.push_back(random_rational(rng, range, max_den));
  return TropMatrix(d, n, std::move(e));
}

// Small integer entries so that ties (and singular minors) are frequent.
inline TropMatrix random_tie_matrix(std::mt19937_64& rng, std::size_t d, std::size_t n, long range = 2) {
  return random_matrix(rng, d, n, range, 1);
}

inline TropMatrix random_01(std::mt19937_64& rng, std::size_t d, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Rational> e;
  for (std::size_t k = 0; k < d * n; ++k) e.emplace_back(coin(rng) ? 1 : 0);
  return TropMatrix(d, n, std::move(e));
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace troprank::testing
