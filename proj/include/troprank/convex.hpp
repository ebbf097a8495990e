#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "troprank/execution.hpp"
#include "troprank/matrix.hpp"

namespace troprank {

/// Type of a point relative to the columns v_1..v_n of a d x n matrix: sets[j] holds the columns i
/// for which coordinate j attains max_k (x_k - v_ik). Column indices are 0-based and sorted.
struct TypeVector {
  std::size_t columns = 0;
  std::vector<std::vector<std::size_t>> sets;

  bool covers_all_columns() const;
  bool bounded() const;  // every sets[j] nonempty
  auto operator<=>(const TypeVector&) const = default;
};

TypeVector type_of_point(const TropVector& x, const TropMatrix& m);

/// (number of connected components of G_S) - 1. Throws DomainError if some column is uncovered.
std::size_t cell_dim_from_type(const TypeVector& s);

/// A point of exact type s (minimum coordinate zero), or nullopt when no point has that type.
std::optional<TropVector> is_type_realizable(const TypeVector& s, const TropMatrix& m);

struct HullCell {
  TypeVector type;
  std::size_t dim = 0;
  TropVector witness;
};

struct HullLimits {
  std::size_t max_rows = 5;
  std::size_t max_cols = 8;
};

/// Every bounded cell of the type decomposition, sorted by type. Throws ResourceError beyond `limits`.
std::vector<HullCell> enumerate_hull_cells(const TropMatrix& m, Execution exec = Execution::parallel,
                                           const HullLimits& limits = {});

/// Largest bounded cell dimension; equals tropical rank minus one.
std::size_t hull_dimension(const TropMatrix& m, const HullLimits& limits = {});

/// Minkowski-sum cell of the mixed subdivision matching a type.
struct MixedCell {
  std::vector<std::vector<std::size_t>> summands;  // summands[i] = coordinates j with i in S_j
  std::size_t mixed_dim = 0;
  bool interior = false;
};

MixedCell type_to_mixed_cell(const TypeVector& s);

/// Componentwise S_j ⊆ T_j: the cell of type t lies in the closure of the cell of type s.
bool type_contains(const TypeVector& t, const TypeVector& s);

}  // namespace troprank
