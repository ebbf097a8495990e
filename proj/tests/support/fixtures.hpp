#pragma once

#include <array>

#include "troprank/matrix.hpp"

namespace troprank::testing {

// Three points in TP^2 whose tropical hull is a path; Barvinok rank two.
inline TropMatrix path_example() { return {{0, 4, 2}, {2, 1, 0}, {2, 4, 3}}; }

// Four rank-one terms whose entrywise minimum is C_6.
inline std::array<TropMatrix, 4> c6_terms() {
  return {TropMatrix{{1, 1, 1, 2, 2, 2},
                     {1, 1, 1, 2, 2, 2},
                     {1, 1, 1, 2, 2, 2},
                     {0, 0, 0, 1, 1, 1},
                     {0, 0, 0, 1, 1, 1},
                     {0, 0, 0, 1, 1, 1}},
          TropMatrix{{1, 1, 0, 0, 0, 1},
                     {1, 1, 0, 0, 0, 1},
                     {2, 2, 1, 1, 1, 2},
                     {2, 2, 1, 1, 1, 2},
                     {2, 2, 1, 1, 1, 2},
                     {1, 1, 0, 0, 0, 1}},
          TropMatrix{{1, 0, 1, 0, 1, 0},
                     {2, 1, 2, 1, 2, 1},
                     {1, 0, 1, 0, 1, 0},
                     {2, 1, 2, 1, 2, 1},
                     {1, 0, 1, 0, 1, 0},
                     {2, 1, 2, 1, 2, 1}},
          TropMatrix{{1, 2, 2, 2, 1, 1},
                     {0, 1, 1, 1, 0, 0},
                     {0, 1, 1, 1, 0, 0},
                     {0, 1, 1, 1, 0, 0},
                     {1, 2, 2, 2, 1, 1},
                     {1, 2, 2, 2, 1, 1}}};
}

// Cocircuit matrix of the Fano plane in its customary printed column order.
inline TropMatrix fano_printed() {
  return {{1, 1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 1, 0, 0}, {0, 0, 1, 1, 0, 1, 0}, {0, 0, 0, 1, 1, 0, 1},
          {1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 0, 1, 1}, {1, 0, 1, 0, 0, 0, 1}};
}

// Known Kapranov rank of fano_printed() over the complex Puiseux field (literature value, not computed).
inline constexpr int kFanoKapranovRankOverC = 4;

// Four points in TP^2 whose maximal independent column sets have sizes 2 and 3.
inline TropMatrix four_point_example() { return {{0, 0, 0, 0}, {0, 0, 1, 2}, {1, 0, 0, -1}}; }

}  // namespace troprank::testing
