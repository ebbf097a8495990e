#pragma once

#include <optional>
#include <vector>

#include "troprank/matrix.hpp"
#include "troprank/puiseux.hpp"
#include "troprank/rank.hpp"

namespace troprank {

/// Entrywise valuation. Throws DomainError on a zero entry.
TropMatrix valuation_matrix(const PuiseuxMatrix& f);

/// Rank over the field of Puiseux series, by fraction-free elimination after t -> s^L.
std::size_t lift_rank(const PuiseuxMatrix& f);

/// Sum over k of (t^{x_ik}) (t^{y_kj}). Throws DomainError unless X ⊙ Y reproduces M.
PuiseuxMatrix barvinok_lift(const TropMatrix& m, const BarvinokWitness& w);

/// The rank-2 lift of C_n with columns (t, 1, t - a_3, ..., t - a_n), (1, t, 1, ..., 1) and
/// col_1 + a_i col_2 for i >= 3. The a_i default to 1, 2, ..., n - 2 and must be distinct and nonzero.
PuiseuxMatrix cn_lift(std::size_t n, std::optional<std::vector<Rational>> a = std::nullopt);

struct Rank2Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Columns shifted by -x and normalised to minimum zero; every positive entry sits in a block.
struct Rank2LiftPlan {
  TropVector x;
  TropMatrix normalized = TropMatrix::filled(1, 1, 0);
  std::vector<std::size_t> zero_rows;
  std::vector<std::size_t> zero_cols;
  std::vector<Rank2Block> blocks;  // ordered by smallest column
  std::vector<std::size_t> row_order;  // zero rows, then block rows
  std::vector<std::size_t> col_order;
};

Rank2LiftPlan rank2_block_decomposition(const TropMatrix& m, const TropVector& x);

/// A hull point with the most blocks; nullopt when no breakpoint splits the columns into two or more
/// blocks, as for a hull that is a single segment.
std::optional<TropVector> rank2_pivot(const TropMatrix& m);

/// A lift of rank exactly 2. Throws DomainError unless tropical_rank(m) == 2.
PuiseuxMatrix rank2_lift(const TropMatrix& m);

}  // namespace troprank
