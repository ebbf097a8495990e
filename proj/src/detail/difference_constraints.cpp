#include "detail/difference_constraints.hpp"

namespace troprank::detail {

namespace {

struct Lex {
  Rational value;
  long eps = 0;

  friend bool operator<(const Lex& a, const Lex& b) {
    return a.value != b.value ? a.value < b.value : a.eps < b.eps;
  }
};

}  // namespace

std::optional<std::vector<Rational>> solve_difference_constraints(std::size_t nodes,
                                                                  const std::vector<DiffConstraint>& cs) {
  std::vector<Lex> dist(nodes, Lex{Rational(0), 0});
  bool settled = false;
  for (std::size_t round = 0; round <= nodes && !settled; ++round) {
    settled = true;
    for (const auto& c : cs) {
      Lex cand{dist[c.from].value + c.bound, dist[c.from].eps - (c.strict ? 1 : 0)};
      if (cand < dist[c.to]) {
        dist[c.to] = cand;
        settled = false;
      }
    }
  }
  if (!settled) return std::nullopt;

  // Each constraint reads (dv - du - b) + (ev - eu + s) eps <= 0; the first part is <= 0 and, when
  // it is negative, bounds eps from above.
  Rational eps(1);
  for (const auto& c : cs) {
    Rational lead = dist[c.to].value - dist[c.from].value - c.bound;
    long slope = dist[c.to].eps - dist[c.from].eps + (c.strict ? 1 : 0);
    if (lead < 0 && slope > 0) {
      Rational limit = -lead / Rational(slope);
      if (limit < eps) eps = limit;
    }
  }
  eps /= 2;
  std::vector<Rational> p(nodes);
  for (std::size_t v = 0; v < nodes; ++v) p[v] = dist[v].value + Rational(dist[v].eps) * eps;
  return p;
}

}  // namespace troprank::detail
