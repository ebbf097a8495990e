#include "troprank/convex.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "detail/difference_constraints.hpp"
#include "troprank/core.hpp"
#include "troprank/errors.hpp"

namespace troprank {

namespace {

void require_valid(const TypeVector& s) {
  if (s.sets.empty()) throw DomainError("type has no coordinates");
  for (const auto& sj : s.sets)
    for (auto i : sj)
      if (i >= s.columns) throw DomainError("type refers to a column outside the matrix");
  if (!s.covers_all_columns()) throw DomainError("type leaves a column uncovered");
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t components() {
    std::size_t c = 0;
    for (std::size_t a = 0; a < parent.size(); ++a) c += find(a) == a ? 1 : 0;
    return c;
  }
};

std::size_t type_graph_components(const TypeVector& s) {
  const std::size_t d = s.sets.size();
  DisjointSets ds(d);
  std::vector<std::size_t> first(s.columns, d);
  for (std::size_t j = 0; j < d; ++j)
    for (auto i : s.sets[j]) {
      if (first[i] == d) first[i] = j;
      else ds.unite(first[i], j);
    }
  return ds.components();
}

std::optional<TypeVector> intersect(const TypeVector& a, const TypeVector& b) {
  TypeVector c{a.columns, std::vector<std::vector<std::size_t>>(a.sets.size())};
  for (std::size_t j = 0; j < a.sets.size(); ++j) {
    std::set_intersection(a.sets[j].begin(), a.sets[j].end(), b.sets[j].begin(), b.sets[j].end(),
                          std::back_inserter(c.sets[j]));
    if (c.sets[j].empty()) return std::nullopt;
  }
  if (!c.covers_all_columns()) return std::nullopt;
  return c;
}

// Vertices of the bounded complex, reached by walking its edges from the first generator. Every edge
// leaving a vertex x points along some 0/1 direction e_A; it is a bounded 1-cell when moving x + t e_A
// keeps every S_j nonempty and splits G_S into exactly two components, and it ends where a coordinate
// of A catches up with the maximum of a column whose maximisers all lie outside A.
std::set<TypeVector> vertex_types(const TropMatrix& m) {
  const std::size_t d = m.rows(), n = m.cols();
  std::set<TypeVector> out;
  std::set<TropVector> seen;
  std::vector<TropVector> queue{normalize_projective(m.column(0))};
  seen.insert(queue.front());
  while (!queue.empty()) {
    TropVector x = std::move(queue.back());
    queue.pop_back();
    const TypeVector t = type_of_point(x, m);
    out.insert(t);
    std::vector<std::vector<std::size_t>> tau(n);
    for (std::size_t j = 0; j < d; ++j)
      for (auto i : t.sets[j]) tau[i].push_back(j);
    for (std::uint64_t a = 1; a + 1 < (std::uint64_t{1} << d); ++a) {
      auto in_a = [a](std::size_t j) { return ((a >> j) & 1u) != 0; };
      TypeVector s{n, std::vector<std::vector<std::size_t>>(d)};
      std::optional<Rational> step;
      for (std::size_t i = 0; i < n; ++i) {
        const bool moves = std::any_of(tau[i].begin(), tau[i].end(), in_a);
        for (auto j : tau[i])
          if (!moves || in_a(j)) s.sets[j].push_back(i);
        if (moves) continue;
        const Rational top = x[tau[i].front()] - m(tau[i].front(), i);
        for (std::size_t k = 0; k < d; ++k) {
          if (!in_a(k)) continue;
          Rational gap = top - (x[k] - m(k, i));
          if (!step || gap < *step) step = gap;
        }
      }
      if (!s.bounded() || type_graph_components(s) != 2 || !step) continue;
      TropVector y = x;
      for (std::size_t k = 0; k < d; ++k)
        if (in_a(k)) y[k] += *step;
      y = normalize_projective(y);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return out;
}

}  // namespace

bool TypeVector::covers_all_columns() const {
  std::vector<char> hit(columns, 0);
  for (const auto& sj : sets)
    for (auto i : sj)
      if (i < columns) hit[i] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool TypeVector::bounded() const {
  return std::none_of(sets.begin(), sets.end(), [](const auto& sj) { return sj.empty(); });
}

TypeVector type_of_point(const TropVector& x, const TropMatrix& m) {
  const std::size_t d = m.rows(), n = m.cols();
  if (x.size() != d) throw ShapeError("point dimension does not match matrix rows");
  TypeVector t{n, std::vector<std::vector<std::size_t>>(d)};
  for (std::size_t i = 0; i < n; ++i) {
    Rational best = x[0] - m(0, i);
    for (std::size_t j = 1; j < d; ++j) best = std::max(best, Rational(x[j] - m(j, i)));
    for (std::size_t j = 0; j < d; ++j)
      if (x[j] - m(j, i) == best) t.sets[j].push_back(i);
  }
  return t;
}

std::size_t cell_dim_from_type(const TypeVector& s) {
  require_valid(s);
  return type_graph_components(s) - 1;
}

std::optional<TropVector> is_type_realizable(const TypeVector& s, const TropMatrix& m) {
  const std::size_t d = m.rows(), n = m.cols();
  if (s.sets.size() != d || s.columns != n) throw ShapeError("type does not match matrix shape");
  require_valid(s);
  std::vector<std::vector<std::size_t>> tau(n);
  for (std::size_t j = 0; j < d; ++j)
    for (auto i : s.sets[j]) tau[i].push_back(j);
  // For column i the maximisers of x_k - m_ki are exactly tau_i: equal within, strictly smaller outside.
  std::vector<detail::DiffConstraint> cs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j0 = tau[i].front();
    std::vector<char> in(d, 0);
    for (auto j : tau[i]) in[j] = 1;
    for (std::size_t k = 0; k < d; ++k) {
      if (k == j0) continue;
      Rational b = m(k, i) - m(j0, i);
      if (in[k]) {
        cs.push_back({j0, k, b, false});
        cs.push_back({k, j0, -b, false});
      } else {
        cs.push_back({j0, k, b, true});
      }
    }
  }
  auto x = detail::solve_difference_constraints(d, cs);
  if (!x) return std::nullopt;
  TropVector p = normalize_projective(*x);
  if (type_of_point(p, m) != s) throw InternalError("realised point has the wrong type");
  return p;
}

std::vector<HullCell> enumerate_hull_cells(const TropMatrix& m, Execution exec, const HullLimits& limits) {
  if (m.rows() > limits.max_rows || m.cols() > limits.max_cols)
    throw ResourceError("hull enumeration is limited to " + std::to_string(limits.max_rows) + " rows and " +
                        std::to_string(limits.max_cols) + " columns");
  std::set<TypeVector> types = vertex_types(m);
  std::vector<TypeVector> frontier(types.begin(), types.end());
  const std::vector<TypeVector> vertices = frontier;
  while (!frontier.empty()) {
    std::vector<TypeVector> fresh;
    for (const auto& a : frontier)
      for (const auto& b : vertices)
        if (auto c = intersect(a, b); c && types.insert(*c).second) fresh.push_back(std::move(*c));
    frontier = std::move(fresh);
  }

  std::vector<TypeVector> candidates(types.begin(), types.end());
  std::vector<std::optional<TropVector>> points(candidates.size());
  const long count = static_cast<long>(candidates.size());
  if (exec == Execution::serial) {
    for (long c = 0; c < count; ++c) points[static_cast<std::size_t>(c)] = is_type_realizable(candidates[c], m);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (long c = 0; c < count; ++c) points[static_cast<std::size_t>(c)] = is_type_realizable(candidates[c], m);
  }
  std::vector<HullCell> cells;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (!points[c]) continue;
    cells.push_back({candidates[c], cell_dim_from_type(candidates[c]), std::move(*points[c])});
  }
  return cells;
}

std::size_t hull_dimension(const TropMatrix& m, const HullLimits& limits) {
  std::size_t dim = 0;
  for (const auto& c : enumerate_hull_cells(m, Execution::parallel, limits)) dim = std::max(dim, c.dim);
  return dim;
}

MixedCell type_to_mixed_cell(const TypeVector& s) {
  require_valid(s);
  const std::size_t d = s.sets.size();
  MixedCell cell;
  cell.summands.assign(s.columns, {});
  DisjointSets ds(d + s.columns);
  for (std::size_t j = 0; j < d; ++j)
    for (auto i : s.sets[j]) {
      cell.summands[i].push_back(j);
      ds.unite(j, d + i);
    }
  cell.mixed_dim = d - ds.components();
  cell.interior = s.bounded();
  return cell;
}

bool type_contains(const TypeVector& t, const TypeVector& s) {
  if (t.sets.size() != s.sets.size()) return false;
  for (std::size_t j = 0; j < s.sets.size(); ++j)
    if (!std::includes(t.sets[j].begin(), t.sets[j].end(), s.sets[j].begin(), s.sets[j].end())) return false;
  return true;
}

}  // namespace troprank
