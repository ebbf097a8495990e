#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "troprank/matrix.hpp"
#include "troprank/puiseux.hpp"

namespace troprank {

/// Element sets are 1-based and sorted.
using ElementSet = std::vector<std::size_t>;

class Matroid {
 public:
  std::size_t ground_size() const { return n_; }
  std::size_t rank() const { return rank_; }
  std::vector<ElementSet> bases() const;

  std::size_t rank_of(const ElementSet& s) const;
  ElementSet closure(const ElementSet& s) const;
  ElementSet loops() const;
  bool is_basis(const ElementSet& s) const;

  /// Complements of the hyperplanes, sorted lexicographically. Computed once and shared by copies.
  const std::vector<ElementSet>& cocircuits() const;

 private:
  friend Matroid matroid_from_bases(std::size_t n, const std::vector<ElementSet>& bases);
  struct Cache;

  std::size_t rank_of_mask(std::uint64_t s) const;
  std::uint64_t closure_mask(std::uint64_t s) const;

  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::uint64_t> bases_;  // sorted
  std::shared_ptr<Cache> cache_;
};

/// Throws DomainError on mixed basis sizes, out-of-range elements or a basis-exchange violation
/// (the message names the violating pair).
Matroid matroid_from_bases(std::size_t n, const std::vector<ElementSet>& bases);

Matroid uniform_matroid(std::size_t n, std::size_t r);

/// "uniform" (params n, r), "fano" or "non_fano". Throws DomainError for anything else.
Matroid builtin(std::string_view name, const std::vector<std::size_t>& params = {});

/// Entry (i, j) is 0 when element i+1 lies in the j-th cocircuit and 1 otherwise.
TropMatrix cocircuit_matrix(const Matroid& m);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// F = (I; C)(A' + t B') with deg F = cocircuit_matrix(m) and rank m.rank(). `a` has one row per
/// element: either columns indexed by the sorted cocircuits with those cocircuits as supports, or
/// rank(m) columns of element vectors. Throws DomainError when `a` does not represent m.
PuiseuxMatrix representation_lift(const Matroid& m, const RationalMatrix& a);

}  // namespace troprank
