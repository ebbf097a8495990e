#include "troprank/matroids.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>
#include <string>
#include <unordered_set>

#include "detail/combinations.hpp"
#include "troprank/errors.hpp"
#include "troprank/lifts.hpp"

namespace troprank {

struct Matroid::Cache {
  std::once_flag once;
  std::vector<ElementSet> cocircuits;
};

namespace {

std::uint64_t to_mask(const ElementSet& s, std::size_t n) {
  std::uint64_t m = 0;
  for (auto e : s) {
    if (e < 1 || e > n) throw DomainError("element " + std::to_string(e) + " is outside 1.." + std::to_string(n));
    m |= std::uint64_t{1} << (e - 1);
  }
  return m;
}

ElementSet to_set(std::uint64_t m) {
  ElementSet s;
  for (std::size_t e = 0; m; ++e, m >>= 1)
    if (m & 1) s.push_back(e + 1);
  return s;
}

std::string show(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

}  // namespace

std::vector<ElementSet> Matroid::bases() const {
  std::vector<ElementSet> out;
  for (auto b : bases_) out.push_back(to_set(b));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Matroid::rank_of_mask(std::uint64_t s) const {
  std::size_t best = 0;
  for (auto b : bases_) best = std::max<std::size_t>(best, std::popcount(b & s));
  return best;
}

std::uint64_t Matroid::closure_mask(std::uint64_t s) const {
  const std::size_t r = rank_of_mask(s);
  std::uint64_t c = s;
  for (std::size_t e = 0; e < n_; ++e) {
    std::uint64_t bit = std::uint64_t{1} << e;
    if (!(s & bit) && rank_of_mask(s | bit) == r) c |= bit;
  }
  return c;
}

std::size_t Matroid::rank_of(const ElementSet& s) const { return rank_of_mask(to_mask(s, n_)); }

ElementSet Matroid::closure(const ElementSet& s) const { return to_set(closure_mask(to_mask(s, n_))); }

ElementSet Matroid::loops() const { return closure(ElementSet{}); }

bool Matroid::is_basis(const ElementSet& s) const {
  return std::binary_search(bases_.begin(), bases_.end(), to_mask(s, n_));
}

const std::vector<ElementSet>& Matroid::cocircuits() const {
  std::call_once(cache_->once, [this] {
    if (rank_ == 0) return;
    std::set<std::uint64_t> hyperplanes;
    for (auto b : bases_)
      for (std::uint64_t rest = b; rest; rest &= rest - 1) hyperplanes.insert(closure_mask(b & ~(rest & -rest)));
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    for (auto h : hyperplanes) cache_->cocircuits.push_back(to_set(all & ~h));
    std::sort(cache_->cocircuits.begin(), cache_->cocircuits.end());
  });
  return cache_->cocircuits;
}

Matroid matroid_from_bases(std::size_t n, const std::vector<ElementSet>& bases) {
  if (n > 64) throw DomainError("ground sets are limited to 64 elements");
  if (bases.empty()) throw DomainError("a matroid needs at least one basis");
  Matroid m;
  m.n_ = n;
  m.rank_ = bases.front().size();
  std::unordered_set<std::uint64_t> seen;
  for (const auto& b : bases) {
    std::uint64_t mask = to_mask(b, n);
    if (static_cast<std::size_t>(std::popcount(mask)) != m.rank_ || b.size() != m.rank_)
      throw DomainError("bases " + show(bases.front()) + " and " + show(b) + " have different sizes");
    if (seen.insert(mask).second) m.bases_.push_back(mask);
  }
  std::sort(m.bases_.begin(), m.bases_.end());
  for (auto b1 : m.bases_)
    for (auto b2 : m.bases_) {
      for (std::uint64_t out = b1 & ~b2; out; out &= out - 1) {
        std::uint64_t x = out & -out;
        bool found = false;
        for (std::uint64_t in = b2 & ~b1; in && !found; in &= in - 1)
          found = seen.contains((b1 & ~x) | (in & -in));
        if (!found)
          throw DomainError("bases " + show(to_set(b1)) + " and " + show(to_set(b2)) +
                            " violate the exchange axiom at element " + std::to_string(std::countr_zero(x) + 1));
      }
    }
  m.cache_ = std::make_shared<Matroid::Cache>();
  return m;
}

Matroid uniform_matroid(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) throw DomainError("uniform matroid needs 1 <= r <= n");
  std::vector<ElementSet> bases;
  for (auto s : detail::all_combinations(n, r)) {
    for (auto& e : s) ++e;
    bases.push_back(s);
  }
  return matroid_from_bases(n, bases);
}

namespace {

Matroid rank3_from_lines(const std::vector<ElementSet>& lines) {
  std::vector<ElementSet> bases;
  for (auto s : detail::all_combinations(7, 3)) {
    for (auto& e : s) ++e;
    if (std::find(lines.begin(), lines.end(), s) == lines.end()) bases.push_back(s);
  }
  return matroid_from_bases(7, bases);
}

}  // namespace

Matroid builtin(std::string_view name, const std::vector<std::size_t>& params) {
  if (name == "uniform") {
    if (params.size() != 2) throw DomainError("uniform takes parameters n and r");
    return uniform_matroid(params[0], params[1]);
  }
  if (!params.empty()) throw DomainError(std::string(name) + " takes no parameters");
  if (name == "fano")
    return rank3_from_lines({{1, 5, 7}, {1, 2, 6}, {2, 3, 7}, {1, 3, 4}, {2, 4, 5}, {3, 5, 6}, {4, 6, 7}});
  if (name == "non_fano")
    return rank3_from_lines({{1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {1, 6, 7}, {2, 5, 7}, {3, 4, 7}});
  throw DomainError("unknown matroid '" + std::string(name) + "'");
}

TropMatrix cocircuit_matrix(const Matroid& m) {
  const auto& cs = m.cocircuits();
  std::vector<Rational> e(m.ground_size() * cs.size(), Rational(1));
  for (std::size_t j = 0; j < cs.size(); ++j)
    for (auto el : cs[j]) e[(el - 1) * cs.size() + j] = 0;
  return TropMatrix(m.ground_size(), cs.size(), std::move(e));
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != r && a[i][c] != 0) {
        Rational f = a[i][c];
        for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
      }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_of_rows(const RationalMatrix& a, const ElementSet& rows) {
  RationalMatrix s;
  for (auto e : rows) s.push_back(a[e - 1]);
  return rref(s).size();
}

// A vector spanning the null space of the given rows (which must have corank one).
std::vector<Rational> normal_of(const RationalMatrix& v, const ElementSet& rows, std::size_t dim) {
  RationalMatrix s;
  for (auto e : rows) s.push_back(v[e - 1]);
  auto pivots = rref(s);
  if (pivots.size() + 1 != dim) throw DomainError("element vectors do not span a hyperplane");
  std::size_t free = 0;
  while (std::count(pivots.begin(), pivots.end(), free)) ++free;
  std::vector<Rational> n(dim, Rational(0));
  n[free] = 1;
  for (std::size_t k = 0; k < pivots.size(); ++k) n[pivots[k]] = -s[k][free];
  return n;
}

bool has_cocircuit_supports(const RationalMatrix& a, const std::vector<ElementSet>& cs) {
  if (a.empty() || a[0].size() != cs.size()) return false;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    ElementSet support;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i][j] != 0) support.push_back(i + 1);
    if (support != cs[j]) return false;
  }
  return true;
}

}  // namespace

PuiseuxMatrix representation_lift(const Matroid& m, const RationalMatrix& a) {
  const std::size_t n = m.ground_size(), r = m.rank();
  if (a.size() != n) throw ShapeError("representation needs one row per element");
  for (const auto& row : a)
    if (row.size() != a[0].size()) throw ShapeError("ragged representation matrix");
  if (!m.loops().empty()) throw DomainError("matroid has loops");
  const auto& cs = m.cocircuits();

  for (auto s : detail::all_combinations(n, r)) {
    for (auto& e : s) ++e;
    if ((rank_of_rows(a, s) == r) != m.is_basis(s))
      throw DomainError("rows " + show(s) + (m.is_basis(s) ? " should" : " should not") + " be independent");
  }

  RationalMatrix cols = a;
  if (!has_cocircuit_supports(a, cs)) {
    if (a[0].size() != r) throw DomainError("columns are neither cocircuit-indexed nor element vectors of rank length");
    cols.assign(n, std::vector<Rational>(cs.size(), Rational(0)));
    for (std::size_t j = 0; j < cs.size(); ++j) {
      ElementSet hyperplane;
      for (std::size_t e = 1; e <= n; ++e)
        if (!std::binary_search(cs[j].begin(), cs[j].end(), e)) hyperplane.push_back(e);
      auto normal = normal_of(a, hyperplane, r);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < r; ++k) cols[i][j] += a[i][k] * normal[k];
    }
    if (!has_cocircuit_supports(cols, cs)) throw DomainError("column supports are not the cocircuits");
  }

  // Non-basis rows as combinations of the rows of the first basis: row_i = c_i * A'.
  const ElementSet basis = m.bases().front();
  std::vector<std::vector<Rational>> coeff(n, std::vector<Rational>(r, Rational(0)));
  for (std::size_t k = 0; k < r; ++k) coeff[basis[k] - 1][k] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (std::binary_search(basis.begin(), basis.end(), i)) continue;
    RationalMatrix sys(cs.size(), std::vector<Rational>(r + 1, Rational(0)));
    for (std::size_t j = 0; j < cs.size(); ++j) {
      for (std::size_t k = 0; k < r; ++k) sys[j][k] = cols[basis[k] - 1][j];
      sys[j][r] = cols[i - 1][j];
    }
    auto pivots = rref(sys);
    if (pivots.size() != r) throw DomainError("row " + std::to_string(i) + " is not in the span of the basis rows");
    for (std::size_t k = 0; k < r; ++k) coeff[i - 1][k] = sys[k][r];
  }

  // One column b of B' for every cocircuit, the first vector in {1..R}^r with (I; C) b nonzero.
  std::vector<Rational> shift;
  for (long range = 3; range <= 12 && shift.empty(); ++range) {
    std::vector<long> b(r, 1);
    for (;;) {
      std::vector<Rational> y(n, Rational(0));
      bool nonzero = true;
      for (std::size_t i = 0; i < n && nonzero; ++i) {
        for (std::size_t k = 0; k < r; ++k) y[i] += coeff[i][k] * b[k];
        nonzero = y[i] != 0;
      }
      if (nonzero) {
        shift = y;
        break;
      }
      std::size_t k = 0;
      while (k < r && b[k] == range) b[k++] = 1;
      if (k == r) break;
      ++b[k];
    }
  }
  if (shift.empty()) throw ResourceError("no integer perturbation with entries up to 12 keeps every row nonzero");

  PuiseuxMatrix f(n, cs.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      f(i, j) = PuiseuxPoly(cols[i][j]) + PuiseuxPoly::monomial(shift[i], Rational(1));
  if (valuation_matrix(f) != cocircuit_matrix(m) || lift_rank(f) != r)
    throw InternalError("representation lift failed verification");
  return f;
}

}  // namespace troprank
