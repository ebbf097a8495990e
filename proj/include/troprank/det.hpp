#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "troprank/matrix.hpp"

namespace troprank {

using Permutation = std::vector<std::size_t>;  // sigma[i] = column matched to row i

/// Tropical determinant with an optimal permutation, feasible dual potentials and, when the minimum
/// is attained twice, a second optimal permutation.
struct SingularityCertificate {
  Rational det_value;
  Permutation sigma;
  TropVector u;
  TropVector v;
  std::optional<Permutation> sigma2;

  bool singular() const { return sigma2.has_value(); }
};

/// Assignment-based determinant. sigma is the lexicographically smallest optimal permutation.
SingularityCertificate trop_det(const TropMatrix& m);

/// Enumerates all r! permutations. Throws ResourceError for r > 10.
SingularityCertificate det_bruteforce(const TropMatrix& m);

/// Verdict only; cheaper than trop_det (no certificate assembly).
bool is_tropically_singular(const TropMatrix& m);

/// Sum of m_{i, sigma(i)}.
Rational permutation_sum(const TropMatrix& m, const Permutation& sigma);

/// Replays a certificate against m: permutation sums, dual feasibility and tightness.
bool check_certificate(const TropMatrix& m, const SingularityCertificate& cert);

struct ParityMinima {
  Rational even_min;
  std::optional<Rational> odd_min;  // absent for 1x1
};

/// Brute-force minima over even and odd permutations. Throws ResourceError for r > 10.
ParityMinima even_odd_minima(const TropMatrix& m);

}  // namespace troprank
