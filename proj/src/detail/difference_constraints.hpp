#pragma once

#include <optional>
#include <vector>

#include "troprank/rational.hpp"

namespace troprank::detail {

// p[to] - p[from] <= bound, or < bound when strict.
struct DiffConstraint {
  std::size_t from;
  std::size_t to;
  Rational bound;
  bool strict = false;
};

// Solves a system of (possibly strict) difference constraints exactly. Strict constraints are read
// as bound - eps with a symbolic eps > 0; shortest paths run on (value, eps-count) pairs ordered
// lexicographically, and eps is then fixed to half the largest admissible value (at most 1/2).
std::optional<std::vector<Rational>> solve_difference_constraints(std::size_t nodes,
                                                                  const std::vector<DiffConstraint>& cs);

}  // namespace troprank::detail
