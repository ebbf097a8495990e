#include "troprank/solve.hpp"

#include <algorithm>

#include "detail/combinations.hpp"
#include "detail/difference_constraints.hpp"
#include "troprank/core.hpp"
#include "troprank/det.hpp"
#include "troprank/errors.hpp"
#include "troprank/rank.hpp"

namespace troprank {

namespace {

void require_rhs(const TropMatrix& m, const TropVector& b) {
  if (b.size() != m.rows()) throw ShapeError("right-hand side length does not match matrix rows");
}

void require_column_guard(const TropMatrix& m, std::size_t max_cols) {
  if (m.cols() > max_cols) throw ResourceError("column subset enumeration is limited to " + std::to_string(max_cols) +
                                               " columns");
}

bool full_rank_columns(const TropMatrix& m, const std::vector<std::size_t>& cols) {
  return tropical_rank(m.select_columns(cols), {.exec = Execution::serial}).rank == cols.size();
}

}  // namespace

TropVector principal_solution(const TropMatrix& m, const TropVector& b) {
  require_rhs(m, b);
  TropVector x(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    x[j] = b[0] - m(0, j);
    for (std::size_t i = 1; i < m.rows(); ++i) x[j] = std::max(x[j], Rational(b[i] - m(i, j)));
  }
  return x;
}

SolveStatus solve_status(const TropMatrix& m, const TropVector& b) {
  SolveStatus st;
  st.x = principal_solution(m, b);
  const TropVector image = trop_apply(m, st.x);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (image[i] > b[i]) st.residual_rows.push_back(i);
  if (!st.residual_rows.empty()) {
    st.kind = SolveStatus::Kind::inconsistent;
    return st;
  }
  // x̂ is the only solution iff every column is the sole minimiser of some row.
  std::vector<char> pinned(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t hits = 0, last = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) + st.x[j] == b[i]) {
        ++hits;
        last = j;
      }
    if (hits == 1) pinned[last] = 1;
  }
  auto loose = std::find(pinned.begin(), pinned.end(), 0);
  if (loose == pinned.end()) {
    st.kind = SolveStatus::Kind::unique;
  } else {
    st.kind = SolveStatus::Kind::multiple;
    st.slack_column = static_cast<std::size_t>(loose - pinned.begin());
  }
  return st;
}

std::optional<TropVector> is_strongly_regular(const TropMatrix& m) {
  auto cert = trop_det(m);
  if (cert.singular()) return std::nullopt;
  const std::size_t n = m.rows();
  // Row i must be minimised only at sigma(i): x_sigma(i) - x_j < m_ij - m_i,sigma(i) for j != sigma(i).
  std::vector<detail::DiffConstraint> cs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != cert.sigma[i]) cs.push_back({j, cert.sigma[i], m(i, j) - m(i, cert.sigma[i]), true});
  auto x = detail::solve_difference_constraints(n, cs);
  if (!x) throw InternalError("non-singular matrix without strictly separating potentials");
  TropVector b = trop_apply(m, *x);
  if (solve_status(m, b).kind != SolveStatus::Kind::unique)
    throw InternalError("strong regularity witness failed verification");
  return b;
}

StrongIndependence strong_independence_rank(const TropMatrix& m, std::size_t max_cols) {
  require_column_guard(m, max_cols);
  for (std::size_t k = std::min(m.rows(), m.cols()); k >= 1; --k) {
    for (const auto& cols : detail::all_combinations(m.cols(), k)) {
      auto sub = m.select_columns(cols);
      auto r = tropical_rank(sub, {.exec = Execution::serial});
      if (r.rank != k) continue;
      StrongIndependence out;
      out.rank = k;
      out.columns = cols;
      out.minor_rows = r.rows;
      auto b = is_strongly_regular(sub.submatrix(r.rows, r.cols));
      if (!b) throw InternalError("certificate minor is singular");
      out.witness = *b;
      return out;
    }
  }
  throw InternalError("a single column is always independent");
}

std::vector<std::vector<std::size_t>> maximal_independent_column_sets(const TropMatrix& m, std::size_t max_cols) {
  require_column_guard(m, max_cols);
  std::vector<std::vector<std::size_t>> independent;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k)
    for (const auto& cols : detail::all_combinations(m.cols(), k))
      if (full_rank_columns(m, cols)) independent.push_back(cols);
  std::vector<std::vector<std::size_t>> maximal;
  for (const auto& s : independent) {
    bool dominated = std::any_of(independent.begin(), independent.end(), [&](const auto& t) {
      return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
    });
    if (!dominated) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

}  // namespace troprank
