#pragma once

#include <optional>
#include <vector>

#include "troprank/matrix.hpp"

namespace troprank {

/// x̂_j = max_i (b_i - m_ij): the least x with M ⊙ x >= b.
TropVector principal_solution(const TropMatrix& m, const TropVector& b);

struct SolveStatus {
  enum class Kind { inconsistent, unique, multiple };
  Kind kind = Kind::inconsistent;
  std::vector<std::size_t> residual_rows;  // inconsistent: rows with (M ⊙ x̂)_i > b_i
  TropVector x;                            // principal solution (a solution unless inconsistent)
  std::optional<std::size_t> slack_column; // multiple: a coordinate of x that can increase
};

SolveStatus solve_status(const TropMatrix& m, const TropVector& b);

/// A right-hand side b for which M ⊙ x = b has exactly one solution, or nullopt when M is
/// tropically singular.
std::optional<TropVector> is_strongly_regular(const TropMatrix& m);

struct StrongIndependence {
  std::size_t rank = 0;
  std::vector<std::size_t> columns;     // strongly independent columns
  std::vector<std::size_t> minor_rows;  // rows of a non-singular square minor on those columns
  TropVector witness;                   // b with a unique solution for that square minor
};

/// Largest strongly independent column set, by subset enumeration. Throws ResourceError for more
/// than `max_cols` columns.
StrongIndependence strong_independence_rank(const TropMatrix& m, std::size_t max_cols = 16);

/// All inclusion-maximal column sets whose submatrix has full tropical rank, sorted.
std::vector<std::vector<std::size_t>> maximal_independent_column_sets(const TropMatrix& m, std::size_t max_cols = 16);

}  // namespace troprank
