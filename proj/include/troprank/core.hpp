#pragma once

#include <optional>

#include "troprank/matrix.hpp"

namespace troprank {

/// (A ⊙ B)_ij = min_k (A_ik + B_kj). Throws ShapeError unless A.cols() == B.rows().
TropMatrix trop_matmul(const TropMatrix& a, const TropMatrix& b);

/// Entrywise minimum. Throws ShapeError on shape mismatch.
TropMatrix trop_add(const TropMatrix& a, const TropMatrix& b);

/// (M ⊙ x)_i = min_j (m_ij + x_j).
TropVector trop_apply(const TropMatrix& m, const TropVector& x);

/// Representative of v in TP^{d-1} with minimum coordinate zero.
TropVector normalize_projective(const TropVector& v);

/// x_i + y_j = m_ij, normalised so that y_0 = 0.
struct RankOneFactor {
  TropVector x;
  TropVector y;
};

/// Factors M as a tropical rank-one matrix X ⊙ Y^T, or returns nullopt when no factorisation exists.
std::optional<RankOneFactor> rank_one_factor(const TropMatrix& m);

/// C_n: 1 on the diagonal, 0 elsewhere. Throws DomainError for n == 0.
TropMatrix classical_identity(std::size_t n);

}  // namespace troprank
