#include "troprank/lifts.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "troprank/core.hpp"
#include "troprank/errors.hpp"
#include "troprank/solve.hpp"

namespace troprank {

TropMatrix valuation_matrix(const PuiseuxMatrix& f) {
  std::vector<Rational> e;
  e.reserve(f.rows() * f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (f(i, j).is_zero())
        throw DomainError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is zero");
      e.push_back(f(i, j).valuation());
    }
  return TropMatrix(f.rows(), f.cols(), std::move(e));
}

namespace {

// Dense polynomial in s over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly div_exact(Poly a, const Poly& b) {
  if (a.empty()) return {};
  if (a.size() < b.size()) throw InternalError("inexact polynomial division");
  Poly q(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw InternalError("inexact polynomial division");
  trim(q);
  return q;
}

Poly poly_mod(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f = t^base * p(t^(1/l)).
struct Laurent {
  Poly p;
  Rational base;
};

Laurent to_laurent(const PuiseuxPoly& f, const mpz_class& l) {
  Laurent out{{}, f.valuation()};
  for (const auto& t : f.terms()) {
    Rational e = (t.exponent - out.base) * Rational(l);
    e.canonicalize();
    std::size_t k = e.get_num().get_ui();
    if (out.p.size() <= k) out.p.resize(k + 1, Rational(0));
    out.p[k] = t.coeff;
  }
  return out;
}

PuiseuxPoly from_laurent(const Laurent& f, const mpz_class& l) {
  std::vector<PuiseuxPoly::Term> terms;
  for (std::size_t k = 0; k < f.p.size(); ++k)
    if (f.p[k] != 0) terms.push_back({f.base + Rational(mpz_class(k), l), f.p[k]});
  return PuiseuxPoly(std::move(terms));
}

// Divides the nonzero entries by their common polynomial factor with nonzero constant term; this
// is a degree-zero rescaling, so valuations are unchanged.
template <std::size_t N>
void remove_common_factor(std::array<PuiseuxPoly*, N> fs) {
  mpz_class l = 1;
  std::size_t nonzero = 0;
  for (auto* f : fs)
    for (const auto& t : f->terms()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.exponent.get_den_mpz_t());
      ++nonzero;
    }
  if (nonzero == 0) return;
  std::array<Laurent, N> ls;
  Poly g;
  for (std::size_t k = 0; k < N; ++k) {
    if (fs[k]->is_zero()) continue;
    ls[k] = to_laurent(*fs[k], l);
    g = g.empty() ? ls[k].p : poly_gcd(g, ls[k].p);
    if (g.size() == 1) return;
  }
  Rational lead = g.back();
  for (auto& c : g) c /= lead;
  for (std::size_t k = 0; k < N; ++k) {
    if (fs[k]->is_zero()) continue;
    ls[k].p = div_exact(ls[k].p, g);
    *fs[k] = from_laurent(ls[k], l);
  }
}

}  // namespace

std::size_t lift_rank(const PuiseuxMatrix& f) {
  mpz_class l = 1;
  std::optional<Rational> lowest;
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      for (const auto& t : f(i, j).terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.exponent.get_den_mpz_t());
        if (!lowest || t.exponent < *lowest) lowest = t.exponent;
      }
  if (!lowest) return 0;

  std::vector<std::vector<Poly>> a(f.rows(), std::vector<Poly>(f.cols()));
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      for (const auto& t : f(i, j).terms()) {
        Rational e = (t.exponent - *lowest) * Rational(l);
        e.canonicalize();
        std::size_t k = e.get_num().get_ui();
        if (a[i][j].size() <= k) a[i][j].resize(k + 1, Rational(0));
        a[i][j][k] = t.coeff;
      }

  std::size_t rank = 0;
  Poly prev{Rational(1)};
  for (std::size_t c = 0; c < f.cols() && rank < f.rows(); ++c) {
    std::size_t p = rank;
    while (p < f.rows() && a[p][c].empty()) ++p;
    if (p == f.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < f.rows(); ++i) {
      for (std::size_t j = c + 1; j < f.cols(); ++j)
        a[i][j] = div_exact(sub(mul(a[rank][c], a[i][j]), mul(a[i][c], a[rank][j])), prev);
      a[i][c].clear();
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

namespace {

// F = P * Q with P d x r and Q r x n.
struct Factored {
  PuiseuxMatrix p;
  PuiseuxMatrix q;
  PuiseuxMatrix product() const { return p * q; }
};

Factored barvinok_factors(const BarvinokWitness& w) {
  Factored f{PuiseuxMatrix(w.x.rows(), w.x.cols()), PuiseuxMatrix(w.y.rows(), w.y.cols())};
  for (std::size_t i = 0; i < w.x.rows(); ++i)
    for (std::size_t k = 0; k < w.x.cols(); ++k) f.p(i, k) = PuiseuxPoly::t_pow(w.x(i, k));
  for (std::size_t k = 0; k < w.y.rows(); ++k)
    for (std::size_t j = 0; j < w.y.cols(); ++j) f.q(k, j) = PuiseuxPoly::t_pow(w.y(k, j));
  return f;
}

bool valuations_match(const PuiseuxMatrix& f, const TropMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (f(i, j).is_zero() || f(i, j).valuation() != m(i, j)) return false;
  return true;
}

}  // namespace

PuiseuxMatrix barvinok_lift(const TropMatrix& m, const BarvinokWitness& w) {
  if (w.x.rows() != m.rows() || w.y.cols() != m.cols() || w.x.cols() != w.y.rows())
    throw ShapeError("decomposition shape does not match the matrix");
  if (trop_matmul(w.x, w.y) != m) throw DomainError("decomposition does not reproduce the matrix");
  PuiseuxMatrix f = barvinok_factors(w).product();
  if (!valuations_match(f, m) || lift_rank(f) > w.x.cols())
    throw InternalError("Barvinok lift failed verification");
  return f;
}

PuiseuxMatrix cn_lift(std::size_t n, std::optional<std::vector<Rational>> a) {
  if (n < 2) throw DomainError("cn_lift needs n >= 2");
  std::vector<Rational> coef;
  if (a) {
    if (a->size() != n - 2) throw ShapeError("expected n - 2 coefficients");
    coef = *a;
  } else {
    for (std::size_t i = 1; i + 2 <= n; ++i) coef.emplace_back(static_cast<long>(i));
  }
  for (std::size_t i = 0; i < coef.size(); ++i) {
    if (coef[i] == 0) throw DomainError("coefficients must be nonzero");
    for (std::size_t k = 0; k < i; ++k)
      if (coef[k] == coef[i]) throw DomainError("coefficients must be distinct");
  }
  const PuiseuxPoly t = PuiseuxPoly::t_pow(1);
  std::vector<PuiseuxPoly> c1(n), c2(n, PuiseuxPoly(1));
  c1[0] = t;
  c1[1] = PuiseuxPoly(1);
  for (std::size_t i = 2; i < n; ++i) c1[i] = t - PuiseuxPoly(coef[i - 2]);
  c2[1] = t;
  PuiseuxMatrix f(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    f(r, 0) = c1[r];
    f(r, 1) = c2[r];
    for (std::size_t i = 2; i < n; ++i) f(r, i) = c1[r] + c2[r].scale(coef[i - 2]);
  }
  return f;
}

namespace {

struct Normalized {
  TropMatrix mprime;
  TropVector shift;  // c_j = min_k (m_kj - x_k)
};

Normalized normalize_at(const TropMatrix& m, const TropVector& x) {
  std::vector<Rational> e(m.rows() * m.cols());
  TropVector c(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    c[j] = m(0, j) - x[0];
    for (std::size_t i = 1; i < m.rows(); ++i) c[j] = std::min<Rational>(c[j], m(i, j) - x[i]);
    for (std::size_t i = 0; i < m.rows(); ++i) e[i * m.cols() + j] = m(i, j) - x[i] - c[j];
  }
  return {TropMatrix(m.rows(), m.cols(), std::move(e)), std::move(c)};
}

// Blocks of the normalised matrix, or nullopt when two cosupports overlap without being equal.
std::optional<std::vector<Rank2Block>> blocks_of(const TropMatrix& mp) {
  std::vector<Rank2Block> blocks;
  for (std::size_t j = 0; j < mp.cols(); ++j) {
    std::vector<std::size_t> cosupport;
    for (std::size_t i = 0; i < mp.rows(); ++i)
      if (mp(i, j) > 0) cosupport.push_back(i);
    if (cosupport.empty()) continue;
    bool placed = false;
    for (auto& b : blocks) {
      if (b.rows == cosupport) {
        b.cols.push_back(j);
        placed = true;
        break;
      }
      std::vector<std::size_t> common;
      std::set_intersection(b.rows.begin(), b.rows.end(), cosupport.begin(), cosupport.end(),
                            std::back_inserter(common));
      if (!common.empty()) return std::nullopt;
    }
    if (!placed) blocks.push_back({cosupport, {j}});
  }
  return blocks;
}

}  // namespace

Rank2LiftPlan rank2_block_decomposition(const TropMatrix& m, const TropVector& x) {
  if (x.size() != m.rows()) throw ShapeError("pivot point has the wrong length");
  if (tropical_rank(m).rank != 2) throw DomainError("matrix does not have tropical rank 2");
  if (solve_status(m, x).kind == SolveStatus::Kind::inconsistent)
    throw DomainError("pivot point is not in the tropical convex hull of the columns");
  auto [mp, shift] = normalize_at(m, x);
  auto blocks = blocks_of(mp);
  if (!blocks) throw InternalError("column cosupports overlap at a hull point");
  Rank2LiftPlan plan;
  plan.x = normalize_projective(x);
  plan.normalized = mp;
  plan.blocks = std::move(*blocks);
  std::vector<bool> in_block_row(m.rows(), false), in_block_col(m.cols(), false);
  for (const auto& b : plan.blocks) {
    for (auto i : b.rows) in_block_row[i] = true;
    for (auto j : b.cols) in_block_col[j] = true;
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!in_block_row[i]) plan.zero_rows.push_back(i);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!in_block_col[j]) plan.zero_cols.push_back(j);
  plan.row_order = plan.zero_rows;
  plan.col_order = plan.zero_cols;
  for (const auto& b : plan.blocks) {
    plan.row_order.insert(plan.row_order.end(), b.rows.begin(), b.rows.end());
    plan.col_order.insert(plan.col_order.end(), b.cols.begin(), b.cols.end());
  }
  return plan;
}

std::optional<TropVector> rank2_pivot(const TropMatrix& m) {
  std::optional<TropVector> best;
  std::size_t best_count = 0;
  for (std::size_t p = 0; p < m.cols(); ++p)
    for (std::size_t q = p + 1; q < m.cols(); ++q)
      for (std::size_t k = 0; k < m.rows(); ++k) {
        Rational s = m(k, p) - m(k, q);
        TropVector z(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) z[i] = std::min<Rational>(m(i, p), m(i, q) + s);
        z = normalize_projective(z);
        auto blocks = blocks_of(normalize_at(m, z).mprime);
        if (!blocks || blocks->size() < 2) continue;
        if (!best || blocks->size() > best_count || (blocks->size() == best_count && z < *best)) {
          best = z;
          best_count = blocks->size();
        }
      }
  return best;
}

namespace {

PuiseuxMatrix row_of(const PuiseuxMatrix& a, std::size_t i) {
  return a.submatrix({i}, [&] {
    std::vector<std::size_t> c(a.cols());
    std::iota(c.begin(), c.end(), 0);
    return c;
  }());
}

Factored lift_general(const TropMatrix& m);

void reduce(Factored& f) {
  for (std::size_t i = 0; i < f.p.rows(); ++i) remove_common_factor<2>({&f.p(i, 0), &f.p(i, 1)});
  for (std::size_t j = 0; j < f.q.cols(); ++j) remove_common_factor<2>({&f.q(0, j), &f.q(1, j)});
}

// Base case: a zero first row and column bordering three single-column blocks.
std::optional<Factored> lift_three_columns(const TropMatrix& k, const std::vector<std::size_t>& block_of_row) {
  Factored f{PuiseuxMatrix(k.rows(), 2), PuiseuxMatrix(2, 4)};
  for (std::size_t i = 0; i < k.rows(); ++i) {
    if (block_of_row[i] == 3) {
      f.p(i, 0) = PuiseuxPoly(-1);
      f.p(i, 1) = PuiseuxPoly(-1);
      continue;
    }
    std::size_t b = block_of_row[i];
    PuiseuxPoly lifted = -PuiseuxPoly::t_pow(k(i, b + 1));
    if (b == 0) {
      f.p(i, 0) = lifted;
      f.p(i, 1) = PuiseuxPoly(-1);
    } else if (b == 1) {
      f.p(i, 0) = PuiseuxPoly(-1);
      f.p(i, 1) = lifted;
    } else {
      f.p(i, 0) = PuiseuxPoly(-1);
      f.p(i, 1) = PuiseuxPoly(1) - lifted;
    }
  }
  f.q(0, 1) = PuiseuxPoly(1);
  f.q(1, 2) = PuiseuxPoly(1);
  f.q(0, 3) = PuiseuxPoly(-1);
  f.q(1, 3) = PuiseuxPoly(-1);
  for (long beta = 2; beta < 12; ++beta) {
    f.q(0, 0) = PuiseuxPoly(1);
    f.q(1, 0) = PuiseuxPoly(beta);
    if (valuations_match(f.product(), k)) return f;
  }
  return std::nullopt;
}

std::array<std::array<PuiseuxPoly, 2>, 2> adjugate(const std::array<std::array<PuiseuxPoly, 2>, 2>& h) {
  return {{{h[1][1], -h[0][1]}, {-h[1][0], h[0][0]}}};
}

// Glues lifts of [[0,0],[0,A]] and [[0,0],[0,B]] (shared first row and column) into a lift of
// [[0,0,0],[0,A,0],[0,0,B]], or nullopt when this choice of parameters is not generic enough.
std::optional<Factored> glue(Factored fa, Factored fb, const TropMatrix& target, long attempt) {
  const std::size_t ra = fa.p.rows() - 1, ca = fa.q.cols() - 1;
  const std::size_t rb = fb.p.rows() - 1, cb = fb.q.cols() - 1;
  Rational top = *std::max_element(target.entries().begin(), target.entries().end());
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
  const Rational h(fl + 1);
  // Attempt 0 tries the plain lifts; later attempts perturb columns by high-order multiples of the
  // border column, which leaves valuations unchanged.
  if (attempt > 0) {
    for (std::size_t j = 1; j <= ca; ++j)
      for (std::size_t s = 0; s < 2; ++s)
        fa.q(s, j) += fa.q(s, 0) * PuiseuxPoly::monomial(Rational(static_cast<long>(j) + attempt), h);
    for (std::size_t j = 1; j <= cb; ++j)
      for (std::size_t s = 0; s < 2; ++s)
        fb.q(s, j) += fb.q(s, 0) * PuiseuxPoly::monomial(Rational(static_cast<long>(ca + j) + attempt), h);
  }

  PuiseuxPoly a00 = (row_of(fa.p, 0) * fa.q.submatrix({0, 1}, {0}))(0, 0);
  PuiseuxPoly b00 = (row_of(fb.p, 0) * fb.q.submatrix({0, 1}, {0}))(0, 0);
  for (std::size_t s = 0; s < 2; ++s) {
    fa.p(0, s) = fa.p(0, s) * b00;
    fb.p(0, s) = fb.p(0, s) * a00;
  }

  // Unknowns h11, h12, h21, h22 of H with H qB = qA, pA H = pB and (P_A[1] H Q_B[:,1]) = c.
  const PuiseuxPoly &qa1 = fa.q(0, 0), &qa2 = fa.q(1, 0), &qb1 = fb.q(0, 0), &qb2 = fb.q(1, 0);
  const PuiseuxPoly &pa1 = fa.p(0, 0), &pa2 = fa.p(0, 1), &pb1 = fb.p(0, 0), &pb2 = fb.p(0, 1);
  const PuiseuxPoly &u1 = fa.p(1, 0), &u2 = fa.p(1, 1), &w1 = fb.q(0, 1), &w2 = fb.q(1, 1);
  const PuiseuxPoly zero;
  const std::array<std::array<PuiseuxPoly, 5>, 5> eq{{
      {qb1, qb2, zero, zero, qa1},
      {zero, zero, qb1, qb2, qa2},
      {pa1, zero, pa2, zero, pb1},
      {zero, pa1, zero, pa2, pb2},
      {u1 * w1, u1 * w2, u2 * w1, u2 * w2, PuiseuxPoly(Rational(attempt % 4 + 1))},
  }};
  const std::array<std::array<std::size_t, 4>, 4> choices{{{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}}};
  std::optional<std::array<PuiseuxPoly, 4>> hnum;
  PuiseuxPoly hden;
  for (const auto& rows : choices) {
    PuiseuxMatrix sys(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) sys(r, c) = eq[rows[r]][c];
    hden = determinant(sys);
    if (hden.is_zero()) continue;
    std::array<PuiseuxPoly, 4> sol;
    for (std::size_t c = 0; c < 4; ++c) {
      PuiseuxMatrix swapped = sys;
      for (std::size_t r = 0; r < 4; ++r) swapped(r, c) = eq[rows[r]][4];
      sol[c] = determinant(swapped);
    }
    hnum = sol;
    break;
  }
  if (!hnum) return std::nullopt;
  for (const auto& e : eq) {
    PuiseuxPoly lhs;
    for (std::size_t c = 0; c < 4; ++c) lhs += e[c] * (*hnum)[c];
    if (lhs != e[4] * hden) return std::nullopt;
  }
  remove_common_factor<5>({&(*hnum)[0], &(*hnum)[1], &(*hnum)[2], &(*hnum)[3], &hden});
  const std::array<std::array<PuiseuxPoly, 2>, 2> hm{{{(*hnum)[0], (*hnum)[1]}, {(*hnum)[2], (*hnum)[3]}}};
  PuiseuxPoly hdet = hm[0][0] * hm[1][1] - hm[0][1] * hm[1][0];
  if (hdet.is_zero()) return std::nullopt;
  const auto adj = adjugate(hm);
  const Rational row_shift = hden.valuation() - hdet.valuation();
  const Rational col_shift = -hden.valuation();

  Factored out{PuiseuxMatrix(1 + ra + rb, 2), PuiseuxMatrix(2, 1 + ca + cb)};
  for (std::size_t i = 0; i <= ra; ++i)
    for (std::size_t s = 0; s < 2; ++s) out.p(i, s) = fa.p(i, s);
  for (std::size_t i = 1; i <= rb; ++i)
    for (std::size_t s = 0; s < 2; ++s)
      out.p(ra + i, s) = (fb.p(i, 0) * adj[0][s] + fb.p(i, 1) * adj[1][s]).shift(row_shift);
  for (std::size_t j = 0; j <= ca; ++j)
    for (std::size_t s = 0; s < 2; ++s) out.q(s, j) = fa.q(s, j);
  for (std::size_t j = 1; j <= cb; ++j)
    for (std::size_t s = 0; s < 2; ++s)
      out.q(s, ca + j) = (hm[s][0] * fb.q(0, j) + hm[s][1] * fb.q(1, j)).shift(col_shift);
  reduce(out);
  if (!valuations_match(out.product(), target)) return std::nullopt;
  return out;
}

// Lift of the bordered block matrix [[0, 0], [0, diag(blocks)]] of the normalised matrix.
Factored lift_bordered(const TropMatrix& mp, const std::vector<Rank2Block>& blocks) {
  std::vector<std::size_t> rows{0}, cols{0}, block_of_row{blocks.size()};
  std::vector<std::size_t> src_rows, src_cols;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto i : blocks[b].rows) {
      src_rows.push_back(i);
      block_of_row.push_back(b);
    }
    for (auto j : blocks[b].cols) src_cols.push_back(j);
  }
  const std::size_t kr = 1 + src_rows.size(), kc = 1 + src_cols.size();
  std::vector<Rational> e(kr * kc, Rational(0));
  for (std::size_t a = 1; a < kr; ++a)
    for (std::size_t c = 1; c < kc; ++c) e[a * kc + c] = mp(src_rows[a - 1], src_cols[c - 1]);
  TropMatrix k(kr, kc, std::move(e));

  if (blocks.size() == 3 && kc == 4) {
    if (auto f = lift_three_columns(k, block_of_row)) return *f;
    throw InternalError("three-column base lift failed validation");
  }

  std::vector<std::size_t> by_size(blocks.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return blocks[a].cols.size() < blocks[b].cols.size(); });
  std::vector<bool> in_a(blocks.size(), false);
  in_a[by_size[0]] = in_a[by_size[1]] = true;

  // Index lists into k: first row/column is the shared zero border.
  std::vector<std::size_t> a_rows{0}, a_cols{0}, b_rows{0}, b_cols{0};
  {
    std::size_t r = 1, c = 1;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      auto& rr = in_a[b] ? a_rows : b_rows;
      auto& cc = in_a[b] ? a_cols : b_cols;
      for (std::size_t t = 0; t < blocks[b].rows.size(); ++t) rr.push_back(r++);
      for (std::size_t t = 0; t < blocks[b].cols.size(); ++t) cc.push_back(c++);
    }
  }
  Factored fa = lift_general(k.submatrix(a_rows, a_cols));
  Factored fb = lift_general(k.submatrix(b_rows, b_cols));

  std::vector<std::size_t> glued_rows(a_rows), glued_cols(a_cols);
  glued_rows.insert(glued_rows.end(), b_rows.begin() + 1, b_rows.end());
  glued_cols.insert(glued_cols.end(), b_cols.begin() + 1, b_cols.end());
  TropMatrix target = k.submatrix(glued_rows, glued_cols);
  for (long attempt = 0; attempt < 16; ++attempt) {
    if (auto g = glue(fa, fb, target, attempt)) {
      Factored f{PuiseuxMatrix(kr, 2), PuiseuxMatrix(2, kc)};
      for (std::size_t a = 0; a < glued_rows.size(); ++a)
        for (std::size_t s = 0; s < 2; ++s) f.p(glued_rows[a], s) = g->p(a, s);
      for (std::size_t c = 0; c < glued_cols.size(); ++c)
        for (std::size_t s = 0; s < 2; ++s) f.q(s, glued_cols[c]) = g->q(s, c);
      return f;
    }
  }
  throw InternalError("rank-2 gluing failed validation for every parameter choice");
}

Factored lift_general(const TropMatrix& m) {
  auto x = rank2_pivot(m);
  std::optional<std::vector<Rank2Block>> blocks;
  std::optional<Normalized> norm;
  if (x) {
    norm = normalize_at(m, *x);
    blocks = blocks_of(norm->mprime);
  }
  if (!blocks || blocks->size() < 3) {
    auto dec = barvinok_decision(m, 2, {.budget = default_search_budget(), .exec = Execution::serial});
    if (dec.status != Decision::yes) throw InternalError("path-shaped hull without a two-term decomposition");
    Factored f = barvinok_factors(*dec.witness);
    if (f.p.cols() == 1) {
      PuiseuxMatrix p(f.p.rows(), 2), q(2, f.q.cols());
      for (std::size_t i = 0; i < p.rows(); ++i) p(i, 0) = p(i, 1) = f.p(i, 0);
      for (std::size_t j = 0; j < q.cols(); ++j) q(0, j) = q(1, j) = f.q(0, j);
      f = {p, q};
    }
    return f;
  }

  Factored core = lift_bordered(norm->mprime, *blocks);
  std::vector<std::size_t> row_in_core(m.rows(), 0), col_in_core(m.cols(), 0);
  {
    std::size_t r = 1, c = 1;
    for (const auto& b : *blocks) {
      for (auto i : b.rows) row_in_core[i] = r++;
      for (auto j : b.cols) col_in_core[j] = c++;
    }
  }
  Factored f{PuiseuxMatrix(m.rows(), 2), PuiseuxMatrix(2, m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t s = 0; s < 2; ++s) f.p(i, s) = core.p(row_in_core[i], s).shift((*x)[i]);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t s = 0; s < 2; ++s) f.q(s, j) = core.q(s, col_in_core[j]).shift(norm->shift[j]);
  return f;
}

}  // namespace

PuiseuxMatrix rank2_lift(const TropMatrix& m) {
  if (tropical_rank(m).rank != 2) throw DomainError("matrix does not have tropical rank 2");
  PuiseuxMatrix f = lift_general(m).product();
  if (!valuations_match(f, m) || lift_rank(f) != 2) throw InternalError("rank-2 lift failed verification");
  return f;
}

}  // namespace troprank
