#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "detail/exact_view.hpp"
#include "troprank/execution.hpp"

namespace troprank::detail {

// Search for M = X ⊙ Y with r factors. Each factor k carries the difference-constraint system
// x_ik + y_kj >= m_ij for all (i, j), plus equality on the entries it is responsible for. Nodes of the
// constraint graph are rows 0..d-1 and columns d..d+n-1 with potentials p(row i) = x_ik and
// p(col j) = -y_kj; all-pairs shortest paths are maintained incrementally per factor.
template <class T>
class FactorSearch {
 public:
  enum class Kind { found, exhausted, capped };

  struct Outcome {
    Kind kind = Kind::exhausted;
    std::uint64_t nodes = 0;
    std::vector<std::vector<T>> potentials;  // per used factor, one value per graph node
  };

  FactorSearch(const DenseView<T>& m, std::size_t r) : m_(m), r_(r), d_(m.rows), n_(m.cols), nn_(d_ + n_) {
    T maxabs(0);
    for (const auto& v : m_.a) maxabs = std::max(maxabs, v < T(0) ? T(-v) : v);
    half_ = T(static_cast<long>(2 * (nn_ + 2))) * (maxabs + T(1));
    big_ = half_ + half_;
    base_.assign(nn_ * nn_, big_);
    for (std::size_t u = 0; u < nn_; ++u) base_[u * nn_ + u] = T(0);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < n_; ++j) base_[i * nn_ + d_ + j] = T(-m_(i, j));
  }

  Outcome run(std::uint64_t budget, Execution exec) const {
    return exec == Execution::serial ? run_serial(budget) : run_parallel(budget);
  }

  Outcome run_serial(std::uint64_t budget) const {
    Outcome out;
    std::uint64_t count = 0;
    State found;
    out.kind = dfs(State{}, count, budget, found, nullptr, 0);
    out.nodes = count;
    if (out.kind == Kind::found) out.potentials = potentials(found);
    return out;
  }

  Outcome run_parallel(std::uint64_t budget) const;

 private:
  struct State {
    std::vector<T> dist;  // used factors, nn x nn each
    std::size_t used = 0;
  };

  struct Expansion {
    bool success = false;
    std::vector<State> children;
  };

  const T& at(const State& s, std::size_t k, std::size_t u, std::size_t v) const {
    return s.dist[k * nn_ * nn_ + u * nn_ + v];
  }

  bool add_equality(State& s, std::size_t k, std::size_t i, std::size_t j) const {
    if (k == s.used) {
      s.dist.insert(s.dist.end(), base_.begin(), base_.end());
      ++s.used;
    }
    T* dk = s.dist.data() + k * nn_ * nn_;
    const std::size_t c = d_ + j;
    const T& w = m_(i, j);
    if (dk[i * nn_ + c] + w < T(0)) return false;
    std::vector<T> into_c(nn_), from_i(nn_);
    for (std::size_t a = 0; a < nn_; ++a) into_c[a] = dk[a * nn_ + c];
    for (std::size_t b = 0; b < nn_; ++b) from_i[b] = dk[i * nn_ + b];
    for (std::size_t a = 0; a < nn_; ++a) {
      if (!(into_c[a] < half_)) continue;
      T head = into_c[a] + w;
      T* row = dk + a * nn_;
      for (std::size_t b = 0; b < nn_; ++b) {
        if (!(from_i[b] < half_)) continue;
        T cand = head + from_i[b];
        if (cand < row[b]) row[b] = cand;
      }
    }
    return true;
  }

  bool covered(const State& s, std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < s.used; ++k)
      if (at(s, k, d_ + j, i) == m_(i, j)) return true;
    return false;
  }

  bool can_take(const State& s, std::size_t k, std::size_t i, std::size_t j) const {
    return !(at(s, k, i, d_ + j) + m_(i, j) < T(0));
  }

  // Branches on the uncovered entry with the fewest options (existing factors that can take it, plus
  // one fresh factor while fewer than r are open).
  Expansion expand(const State& s) const {
    Expansion ex;
    std::size_t best_i = 0, best_j = 0, best_count = r_ + 2;
    bool any = false;
    for (std::size_t i = 0; i < d_ && best_count > 0; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (covered(s, i, j)) continue;
        any = true;
        std::size_t count = s.used < r_ ? 1 : 0;
        for (std::size_t k = 0; k < s.used && count < best_count; ++k) count += can_take(s, k, i, j) ? 1 : 0;
        if (count < best_count) {
          best_count = count;
          best_i = i;
          best_j = j;
          if (count == 0) break;
        }
      }
    if (!any) {
      ex.success = true;
      return ex;
    }
    for (std::size_t k = 0; k < s.used; ++k) {
      if (!can_take(s, k, best_i, best_j)) continue;
      State child = s;
      if (add_equality(child, k, best_i, best_j)) ex.children.push_back(std::move(child));
    }
    if (s.used < r_) {
      State child = s;
      add_equality(child, s.used, best_i, best_j);
      ex.children.push_back(std::move(child));
    }
    return ex;
  }

  Kind dfs(const State& s, std::uint64_t& count, std::uint64_t cap, State& found,
           const std::atomic<std::size_t>* cancel, std::size_t self) const {
    if (cancel && cancel->load(std::memory_order_relaxed) < self) return Kind::capped;
    Expansion ex = expand(s);
    if (ex.success) {
      found = s;
      return Kind::found;
    }
    for (const auto& child : ex.children) {
      if (++count > cap) return Kind::capped;
      Kind k = dfs(child, count, cap, found, cancel, self);
      if (k != Kind::exhausted) return k;
    }
    return Kind::exhausted;
  }

  std::vector<std::vector<T>> potentials(const State& s) const {
    std::vector<std::vector<T>> out(s.used, std::vector<T>(nn_, T(0)));
    for (std::size_t k = 0; k < s.used; ++k)
      for (std::size_t v = 0; v < nn_; ++v)
        for (std::size_t u = 0; u < nn_; ++u) {
          const T& duv = at(s, k, u, v);
          if (duv < half_ && duv < out[k][v]) out[k][v] = duv;
        }
    return out;
  }

  const DenseView<T>& m_;
  std::size_t r_, d_, n_, nn_;
  T half_, big_;
  std::vector<T> base_;
};

template <class T>
typename FactorSearch<T>::Outcome FactorSearch<T>::run_parallel(std::uint64_t budget) const {
  // Split the tree into a fixed frontier (independent of the thread count), search the subtrees
  // concurrently, then replay node counts in serial preorder so the outcome matches run_serial.
  constexpr std::size_t kFrontier = 256;
  struct Item {
    std::vector<std::uint32_t> path;
    State state;
    bool leaf_success = false;
  };
  Outcome out;
  std::vector<std::vector<std::uint32_t>> internal;
  std::vector<Item> level;
  {
    Expansion root = expand(State{});
    if (root.success) {
      out.kind = Kind::found;
      out.potentials = potentials(State{});
      return out;
    }
    for (std::uint32_t c = 0; c < root.children.size(); ++c) level.push_back({{c}, std::move(root.children[c]), false});
  }
  for (int round = 0; round < 64 && !level.empty() && level.size() < kFrontier; ++round) {
    std::vector<Item> next;
    bool grew = false;
    for (auto& item : level) {
      if (item.leaf_success) {
        next.push_back(std::move(item));
        continue;
      }
      Expansion ex = expand(item.state);
      if (ex.success) {
        item.leaf_success = true;
        next.push_back(std::move(item));
        continue;
      }
      internal.push_back(item.path);
      grew = true;
      for (std::uint32_t c = 0; c < ex.children.size(); ++c) {
        auto p = item.path;
        p.push_back(c);
        next.push_back({std::move(p), std::move(ex.children[c]), false});
      }
    }
    level = std::move(next);
    if (!grew) break;
  }

  // Preorder events: internal nodes cost one each, frontier items carry their subtree result.
  struct Event {
    const std::vector<std::uint32_t>* path;
    long item;  // -1 for internal
  };
  std::vector<Event> events;
  for (const auto& p : internal) events.push_back({&p, -1});
  for (std::size_t k = 0; k < level.size(); ++k) events.push_back({&level[k].path, static_cast<long>(k)});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return *a.path < *b.path; });
  std::vector<std::uint64_t> before(level.size(), 0);
  {
    std::uint64_t upper = 0;
    for (const auto& e : events) {
      if (e.item < 0) ++upper;
      else before[static_cast<std::size_t>(e.item)] = upper;
    }
  }

  struct Result {
    Kind kind = Kind::capped;
    std::uint64_t nodes = 0;
    State found;
  };
  std::vector<Result> results(level.size());
  std::atomic<std::size_t> first_found{level.size()};
  const long count_items = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long kk = 0; kk < count_items; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    if (first_found.load(std::memory_order_relaxed) < k) continue;
    if (before[k] >= budget) continue;
    const std::uint64_t cap = budget - before[k];
    Result& res = results[k];
    std::uint64_t count = 1;
    if (level[k].leaf_success) {
      res.kind = Kind::found;
      res.found = level[k].state;
    } else {
      res.kind = dfs(level[k].state, count, cap, res.found, &first_found, k);
    }
    res.nodes = count;
    if (res.kind == Kind::found) {
      std::size_t cur = first_found.load();
      while (k < cur && !first_found.compare_exchange_weak(cur, k)) {
      }
    }
  }

  std::uint64_t cum = 0;
  for (const auto& e : events) {
    if (e.item < 0) {
      if (++cum > budget) {
        out.kind = Kind::capped;
        out.nodes = cum;
        return out;
      }
      continue;
    }
    const Result& res = results[static_cast<std::size_t>(e.item)];
    if (res.kind == Kind::found && cum + res.nodes <= budget) {
      out.kind = Kind::found;
      out.nodes = cum + res.nodes;
      out.potentials = potentials(res.found);
      return out;
    }
    if (res.kind == Kind::exhausted && cum + res.nodes <= budget) {
      cum += res.nodes;
      continue;
    }
    out.kind = Kind::capped;
    out.nodes = budget + 1;
    return out;
  }
  out.kind = Kind::exhausted;
  out.nodes = cum;
  return out;
}

}  // namespace troprank::detail
