#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "troprank/execution.hpp"
#include "troprank/matrix.hpp"

namespace troprank {

struct TropicalRankOptions {
  std::uint64_t minor_budget = 50'000'000;  // minors examined before giving up on the upper bound
  Execution exec = Execution::parallel;
};

struct TropicalRank {
  std::size_t rank = 0;
  std::vector<std::size_t> rows;  // a non-singular rank x rank minor
  std::vector<std::size_t> cols;
  bool upper_verified = true;  // false: rank is only a certified lower bound
};

TropicalRank tropical_rank(const TropMatrix& m, const TropicalRankOptions& opts = {});

/// Longest chain in the union-closed family of column zero-sets. Throws DomainError unless m is 0/1
/// without an all-ones column.
std::size_t tropical_rank_01(const TropMatrix& m);

/// M = X ⊙ Y with X d x r and Y r x n.
struct BarvinokWitness {
  TropMatrix x = TropMatrix::filled(1, 1, 0);
  TropMatrix y = TropMatrix::filled(1, 1, 0);
};

/// Default node budget for the witness search; TROPRANK_BUDGET overrides it.
std::uint64_t default_search_budget();

struct SearchOptions {
  std::uint64_t budget = default_search_budget();
  Execution exec = Execution::parallel;
};

enum class Decision { yes, no, undecided };

struct BarvinokDecision {
  Decision status = Decision::no;
  std::optional<BarvinokWitness> witness;  // present iff yes
  std::uint64_t nodes = 0;
};

/// Is M a tropical sum of at most r rank-one matrices? `undecided` means the budget ran out.
BarvinokDecision barvinok_decision(const TropMatrix& m, std::size_t r, const SearchOptions& opts = {});

struct BarvinokRank {
  bool exact = false;
  std::size_t lo = 0;
  std::size_t hi = 0;
  BarvinokWitness witness;  // factorisation with hi factors
  std::uint64_t nodes = 0;
};

BarvinokRank barvinok_rank(const TropMatrix& m, const SearchOptions& opts = {});

/// Barvinok rank <= 2, decided minor by minor on all 3x3 submatrices.
bool barvinok_rank2_fast(const TropMatrix& m, Execution exec = Execution::parallel);

/// Barvinok rank of C_n: the least r with n <= binom(r, floor(r/2)).
std::size_t cn_barvinok_rank(std::size_t n);

enum class KapranovRule { none, rank_one, rank_two, near_full };

/// "R1", "R2", "R3" or "none".
std::string rule_tag(KapranovRule rule);

struct KapranovBounds {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool exact = false;
  KapranovRule rule = KapranovRule::none;
};

KapranovBounds kapranov_report(const TropMatrix& m, const SearchOptions& opts = {});

struct RankReport {
  TropicalRank tropical;
  BarvinokRank barvinok;
  KapranovBounds kapranov;
};

/// All three ranks; Kapranov bounds reuse the tropical and Barvinok results.
RankReport rank_report(const TropMatrix& m, const SearchOptions& opts = {});

/// Sanity check of tropical <= kapranov.lo <= kapranov.hi <= barvinok.hi.
bool rank_chain_holds(const RankReport& r);

}  // namespace troprank
