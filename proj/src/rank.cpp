#include "troprank/rank.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <bit>
#include <limits>
#include <set>

#include "detail/assignment.hpp"
#include "detail/barvinok_search.hpp"
#include "detail/combinations.hpp"
#include "troprank/core.hpp"
#include "troprank/errors.hpp"

namespace troprank {

namespace {

using detail::DenseView;

// First non-singular k x k minor in (row subset, column subset) lexicographic order, scanning at most
// `limit` minors. Returns the flat index into the scan order, or `total` if none was found.
template <class T>
std::uint64_t first_nonsingular_minor(const DenseView<T>& a, const std::vector<std::vector<std::size_t>>& row_sets,
                                      const std::vector<std::vector<std::size_t>>& col_sets, std::uint64_t limit,
                                      Execution exec) {
  const std::uint64_t total = static_cast<std::uint64_t>(row_sets.size()) * col_sets.size();
  const std::uint64_t scan = std::min(total, limit);
  const std::size_t nc = col_sets.size();
  auto singular_at = [&](std::uint64_t idx) {
    auto sub = detail::sub_view(a, row_sets[idx / nc], col_sets[idx % nc]);
    return detail::is_singular_view(sub);
  };
  if (exec == Execution::serial) {
    for (std::uint64_t idx = 0; idx < scan; ++idx)
      if (!singular_at(idx)) return idx;
    return total;
  }
  std::atomic<std::uint64_t> best{total};
  const auto n = static_cast<long long>(scan);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long s = 0; s < n; ++s) {
    const auto idx = static_cast<std::uint64_t>(s);
    if (idx > best.load(std::memory_order_relaxed)) continue;
    if (!singular_at(idx)) {
      std::uint64_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  return best.load();
}

template <class T>
TropicalRank tropical_rank_view(const DenseView<T>& a, const TropicalRankOptions& opts) {
  // Non-singularity is inherited by some (k-1)-minor, so the first size without a non-singular
  // minor bounds the rank.
  TropicalRank out;
  out.rank = 1;
  out.rows = {0};
  out.cols = {0};
  std::uint64_t spent = 1;
  const std::size_t kmax = std::min(a.rows, a.cols);
  for (std::size_t k = 2; k <= kmax; ++k) {
    auto row_sets = detail::all_combinations(a.rows, k);
    auto col_sets = detail::all_combinations(a.cols, k);
    const std::uint64_t total = static_cast<std::uint64_t>(row_sets.size()) * col_sets.size();
    const std::uint64_t left = opts.minor_budget > spent ? opts.minor_budget - spent : 0;
    const std::uint64_t idx = first_nonsingular_minor(a, row_sets, col_sets, left, opts.exec);
    if (idx == total) {
      if (total > left) out.upper_verified = false;
      return out;
    }
    spent += idx + 1;
    out.rank = k;
    out.rows = row_sets[idx / col_sets.size()];
    out.cols = col_sets[idx % col_sets.size()];
  }
  return out;
}

BarvinokWitness direct_factorisation(const TropMatrix& m, std::size_t r) {
  // r >= n: X = M and Y = 0 on the diagonal, large elsewhere. r >= d: the transposed construction.
  // Factors beyond the matrix size repeat factor 0.
  const std::size_t d = m.rows(), n = m.cols();
  auto entries = m.entries();
  auto [lo, hi] = std::minmax_element(entries.begin(), entries.end());
  const Rational big = *hi - *lo + 1;
  auto selector = [&](std::size_t factor, std::size_t index, std::size_t size) {
    return (factor < size ? factor : 0) == index ? Rational(0) : big;
  };
  std::vector<Rational> x, y;
  if (r >= n) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < r; ++k) x.push_back(m(i, k < n ? k : 0));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < n; ++j) y.push_back(selector(k, j, n));
  } else {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < r; ++k) x.push_back(selector(k, i, d));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < n; ++j) y.push_back(m(k < d ? k : 0, j));
  }
  return {TropMatrix(d, r, std::move(x)), TropMatrix(r, n, std::move(y))};
}

template <class T>
std::optional<BarvinokWitness> witness_from_potentials(const std::vector<std::vector<T>>& pot, const mpz_class& scale,
                                                       std::size_t d, std::size_t n, std::size_t r) {
  std::vector<Rational> x(d * r), y(r * n);
  for (std::size_t k = 0; k < r; ++k) {
    const auto& p = pot[k < pot.size() ? k : 0];
    for (std::size_t i = 0; i < d; ++i) x[i * r + k] = detail::to_rational(p[i], scale);
    for (std::size_t j = 0; j < n; ++j) y[k * n + j] = -detail::to_rational(p[d + j], scale);
  }
  return BarvinokWitness{TropMatrix(d, r, std::move(x)), TropMatrix(r, n, std::move(y))};
}

}  // namespace

TropicalRank tropical_rank(const TropMatrix& m, const TropicalRankOptions& opts) {
  return detail::with_exact_view(m, [&](const auto& a, const mpz_class&) { return tropical_rank_view(a, opts); });
}

std::size_t tropical_rank_01(const TropMatrix& m) {
  const std::size_t d = m.rows(), n = m.cols();
  if (d > 62) throw ResourceError("0/1 rank supports at most 62 rows");
  std::set<std::uint64_t> family;
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t zeros = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (m(i, j) == 0) zeros |= std::uint64_t{1} << i;
      else if (m(i, j) != 1) throw DomainError("entries must be 0 or 1");
    }
    if (zeros == 0) throw DomainError("column " + std::to_string(j + 1) + " is all ones");
    family.insert(zeros);
  }
  std::vector<std::uint64_t> frontier(family.begin(), family.end());
  const std::vector<std::uint64_t> supports = frontier;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> fresh;
    for (auto s : frontier)
      for (auto t : supports)
        if (family.insert(s | t).second) fresh.push_back(s | t);
    if (family.size() > (std::size_t{1} << 20)) throw ResourceError("support poset too large");
    frontier = std::move(fresh);
  }
  std::vector<std::uint64_t> sets(family.begin(), family.end());
  std::sort(sets.begin(), sets.end(), [](auto a, auto b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  std::vector<std::size_t> chain(sets.size(), 1);
  std::size_t best = 0;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (std::size_t t = 0; t < s; ++t)
      if (sets[t] != sets[s] && (sets[t] & ~sets[s]) == 0) chain[s] = std::max(chain[s], chain[t] + 1);
    best = std::max(best, chain[s]);
  }
  return best;
}

std::uint64_t default_search_budget() {
  if (const char* env = std::getenv("TROPRANK_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 5'000'000;
}

BarvinokDecision barvinok_decision(const TropMatrix& m, std::size_t r, const SearchOptions& opts) {
  if (r == 0) throw DomainError("number of factors must be positive");
  const std::size_t d = m.rows(), n = m.cols();
  BarvinokDecision out;
  if (r >= std::min(d, n)) {
    out.status = Decision::yes;
    out.witness = direct_factorisation(m, r);
    return out;
  }
  out = detail::with_exact_view(m, [&](const auto& a, const mpz_class& scale) {
    BarvinokDecision res;
    detail::FactorSearch search(a, r);
    auto o = search.run(opts.budget, opts.exec);
    res.nodes = o.nodes;
    using Kind = typename decltype(search)::Kind;
    if (o.kind == Kind::found) {
      res.status = Decision::yes;
      res.witness = witness_from_potentials(o.potentials, scale, d, n, r);
    } else {
      res.status = o.kind == Kind::exhausted ? Decision::no : Decision::undecided;
    }
    return res;
  });
  if (out.witness && trop_matmul(out.witness->x, out.witness->y) != m)
    throw InternalError("factor search produced a witness that does not reproduce the matrix");
  return out;
}

BarvinokRank barvinok_rank(const TropMatrix& m, const SearchOptions& opts) {
  const std::size_t full = std::min(m.rows(), m.cols());
  BarvinokRank out;
  std::size_t r = tropical_rank(m, {.exec = opts.exec}).rank;
  for (; r < full; ++r) {
    auto dec = barvinok_decision(m, r, opts);
    out.nodes += dec.nodes;
    if (dec.status == Decision::yes) {
      out.exact = true;
      out.lo = out.hi = r;
      out.witness = std::move(*dec.witness);
      return out;
    }
    if (dec.status == Decision::undecided) {
      out.exact = false;
      out.lo = r;
      out.hi = full;
      out.witness = direct_factorisation(m, full);
      return out;
    }
  }
  out.exact = true;
  out.lo = out.hi = full;
  out.witness = direct_factorisation(m, full);
  return out;
}

bool barvinok_rank2_fast(const TropMatrix& m, Execution exec) {
  if (std::min(m.rows(), m.cols()) <= 2) return true;
  auto row_sets = detail::all_combinations(m.rows(), 3);
  auto col_sets = detail::all_combinations(m.cols(), 3);
  const long total = static_cast<long>(row_sets.size() * col_sets.size());
  const SearchOptions local{std::numeric_limits<std::uint64_t>::max(), Execution::serial};
  auto minor_ok = [&](long idx) {
    const auto& rs = row_sets[static_cast<std::size_t>(idx) / col_sets.size()];
    const auto& cs = col_sets[static_cast<std::size_t>(idx) % col_sets.size()];
    return barvinok_decision(m.submatrix(rs, cs), 2, local).status == Decision::yes;
  };
  if (exec == Execution::serial) {
    for (long idx = 0; idx < total; ++idx)
      if (!minor_ok(idx)) return false;
    return true;
  }
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 8)
  for (long idx = 0; idx < total; ++idx) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    if (!minor_ok(idx)) ok.store(false);
  }
  return ok.load();
}

std::size_t cn_barvinok_rank(std::size_t n) {
  if (n == 0) throw DomainError("n must be positive");
  const mpz_class target(std::to_string(n));
  for (unsigned long r = 1;; ++r) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), r, r / 2);
    if (target <= b) return r;
  }
}

std::string rule_tag(KapranovRule rule) {
  switch (rule) {
    case KapranovRule::rank_one: return "R1";
    case KapranovRule::rank_two: return "R2";
    case KapranovRule::near_full: return "R3";
    case KapranovRule::none: break;
  }
  return "none";
}

namespace {

KapranovBounds kapranov_from(const TropMatrix& m, std::size_t tropical, const BarvinokRank* barvinok,
                             const SearchOptions& opts) {
  KapranovBounds k;
  k.lo = tropical;
  const std::size_t full = std::min(m.rows(), m.cols());
  if (tropical == 1) k.rule = KapranovRule::rank_one;
  else if (tropical == 2) k.rule = KapranovRule::rank_two;
  else if (tropical + 1 >= full) k.rule = KapranovRule::near_full;
  if (k.rule != KapranovRule::none) {
    k.exact = true;
    k.hi = k.lo;
    return k;
  }
  k.hi = barvinok ? barvinok->hi : barvinok_rank(m, opts).hi;
  return k;
}

}  // namespace

KapranovBounds kapranov_report(const TropMatrix& m, const SearchOptions& opts) {
  return kapranov_from(m, tropical_rank(m, {.exec = opts.exec}).rank, nullptr, opts);
}

RankReport rank_report(const TropMatrix& m, const SearchOptions& opts) {
  RankReport rep;
  rep.tropical = tropical_rank(m, {.exec = opts.exec});
  rep.barvinok = barvinok_rank(m, opts);
  rep.kapranov = kapranov_from(m, rep.tropical.rank, &rep.barvinok, opts);
  return rep;
}

bool rank_chain_holds(const RankReport& r) {
  return r.tropical.rank <= r.kapranov.lo && r.kapranov.lo <= r.kapranov.hi && r.kapranov.hi <= r.barvinok.hi &&
         r.barvinok.lo <= r.barvinok.hi && r.tropical.rank <= r.barvinok.lo;
}

}  // namespace troprank
