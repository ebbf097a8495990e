#pragma once

#include <array>
#include <map>

#include "support/oracles.hpp"
#include "troprank/puiseux.hpp"

namespace troprank::testing {

// Every 3x3 minor expanded along its first row, reusing the 2x2 minors of the lower rows.
inline bool all_3x3_minors_vanish(const PuiseuxMatrix& f) {
  std::map<std::array<std::size_t, 4>, PuiseuxPoly> minor2;
  auto m2 = [&](std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) -> const PuiseuxPoly& {
    auto [it, fresh] = minor2.try_emplace({r1, r2, c1, c2});
    if (fresh) it->second = f(r1, c1) * f(r2, c2) - f(r1, c2) * f(r2, c1);
    return it->second;
  };
  for (const auto& rs : subsets_of_size(f.rows(), 3))
    for (const auto& cs : subsets_of_size(f.cols(), 3)) {
      PuiseuxPoly det = f(rs[0], cs[0]) * m2(rs[1], rs[2], cs[1], cs[2]) -
                        f(rs[0], cs[1]) * m2(rs[1], rs[2], cs[0], cs[2]) +
                        f(rs[0], cs[2]) * m2(rs[1], rs[2], cs[0], cs[1]);
      if (!det.is_zero()) return false;
    }
  return true;
}

}  // namespace troprank::testing
