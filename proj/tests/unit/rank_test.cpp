#include <gtest/gtest.h>

#include <set>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_matrix.hpp"
#include "troprank/core.hpp"
#include "troprank/det.hpp"
#include "troprank/errors.hpp"
#include "troprank/rank.hpp"

using namespace troprank;
namespace tt = troprank::testing;

namespace {

std::vector<TropMatrix> rank_one_terms(const BarvinokWitness& w) {
  std::vector<TropMatrix> terms;
  for (std::size_t k = 0; k < w.x.cols(); ++k)
    terms.push_back(trop_matmul(TropMatrix(w.x.rows(), 1, w.x.column(k)), TropMatrix(1, w.y.cols(), w.y.row(k))));
  return terms;
}

TropMatrix with_no_all_ones_column(TropMatrix m) {
  std::vector<Rational> e(m.entries().begin(), m.entries().end());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    bool ones = true;
    for (std::size_t i = 0; i < m.rows(); ++i) ones = ones && m(i, j) == 1;
    if (ones) e[j] = 0;
  }
  return TropMatrix(m.rows(), m.cols(), std::move(e));
}

}  // namespace

TEST(TropicalRank, ClassicalIdentitiesHaveRankTwo) {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto r = tropical_rank(classical_identity(n));
    EXPECT_EQ(r.rank, 2u) << "n=" << n;
    EXPECT_TRUE(r.upper_verified);
    EXPECT_FALSE(trop_det(classical_identity(n).submatrix(r.rows, r.cols)).singular());
  }
}

TEST(TropicalRank, SmallExamples) {
  EXPECT_EQ(tropical_rank(TropMatrix{{0}}).rank, 1u);
  EXPECT_EQ(tropical_rank(tt::fano_printed()).rank, 3u);
  EXPECT_EQ(tropical_rank(tt::path_example()).rank, 2u);
  EXPECT_EQ(tropical_rank(TropMatrix::filled(4, 3, 2)).rank, 1u);
}

TEST(TropicalRank, MatchesDescendingOracle) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 150; ++t) {
    auto d = tt::random_size(rng, 1, 5), n = tt::random_size(rng, 1, 5);
    auto m = t % 2 ? tt::random_tie_matrix(rng, d, n, 1) : tt::random_matrix(rng, d, n);
    auto r = tropical_rank(m);
    EXPECT_EQ(r.rank, tt::tropical_rank_oracle(m));
    EXPECT_FALSE(det_bruteforce(m.submatrix(r.rows, r.cols)).singular());
  }
}

TEST(TropicalRank, SerialAndParallelAgree) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    auto m = tt::random_tie_matrix(rng, 6, 7, 1);
    auto a = tropical_rank(m, {.exec = Execution::serial});
    auto b = tropical_rank(m, {.exec = Execution::parallel});
    EXPECT_EQ(a.rank, b.rank);
    EXPECT_EQ(a.rows, b.rows);
    EXPECT_EQ(a.cols, b.cols);
  }
}

TEST(TropicalRank, MinorBudgetLeavesUpperBoundUnverified) {
  auto r = tropical_rank(classical_identity(6), {.minor_budget = 10});
  EXPECT_FALSE(r.upper_verified);
  EXPECT_GE(r.rank, 1u);
  EXPECT_LE(r.rank, 2u);
}

TEST(TropicalRank01, Examples) {
  EXPECT_EQ(tropical_rank_01(classical_identity(3)), 2u);
  EXPECT_EQ(tropical_rank_01(TropMatrix::filled(3, 3, 0)), 1u);
  EXPECT_EQ(tropical_rank_01(tt::fano_printed()), 3u);
  EXPECT_THROW(tropical_rank_01(TropMatrix{{0, 2}, {1, 0}}), DomainError);
  EXPECT_THROW(tropical_rank_01(TropMatrix{{0, 1}, {1, 1}}), DomainError);
}

TEST(TropicalRank01, AgreesWithTropicalRank) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 100; ++t) {
    auto m = with_no_all_ones_column(tt::random_01(rng, tt::random_size(rng, 1, 6), tt::random_size(rng, 1, 6)));
    EXPECT_EQ(tropical_rank_01(m), tropical_rank(m).rank);
  }
}

TEST(BarvinokDecision, PathExampleRecoversTheTwoTermDecomposition) {
  auto d = barvinok_decision(tt::path_example(), 2);
  ASSERT_EQ(d.status, Decision::yes);
  auto terms = rank_one_terms(*d.witness);
  std::set<std::vector<Rational>> got, want;
  for (const auto& t : terms) got.insert({t.entries().begin(), t.entries().end()});
  TropMatrix a{{0, 4, 2}, {2, 6, 4}, {2, 6, 4}}, b{{5, 4, 3}, {2, 1, 0}, {5, 4, 3}};
  want.insert({a.entries().begin(), a.entries().end()});
  want.insert({b.entries().begin(), b.entries().end()});
  EXPECT_EQ(got, want);
}

TEST(BarvinokDecision, C3DoesNotSplitIntoTwo) {
  EXPECT_EQ(barvinok_decision(classical_identity(3), 2).status, Decision::no);
}

TEST(BarvinokDecision, FullSizeUsesDirectConstruction) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 10; ++t) {
    auto m = tt::random_matrix(rng, 3, 4);
    for (std::size_t r : {3u, 4u, 5u}) {
      auto d = barvinok_decision(m, r);
      ASSERT_EQ(d.status, Decision::yes);
      EXPECT_EQ(d.witness->x.cols(), r);
      EXPECT_EQ(trop_matmul(d.witness->x, d.witness->y), m);
    }
  }
  EXPECT_THROW(barvinok_decision(TropMatrix{{0}}, 0), DomainError);
}

TEST(BarvinokDecision, MatchesWitnessMapEnumeration) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 120; ++t) {
    auto d = tt::random_size(rng, 3, 4), n = t % 3 == 0 ? std::size_t{3} : tt::random_size(rng, 3, 4);
    if (d * n > 12) n = 3;
    auto m = t % 2 ? tt::random_tie_matrix(rng, d, n, 2)
                   : trop_add(trop_matmul(tt::random_matrix(rng, d, 2, 3, 1), tt::random_matrix(rng, 2, n, 3, 1)),
                              tt::random_tie_matrix(rng, d, n, 3));
    auto dec = barvinok_decision(m, 2);
    ASSERT_NE(dec.status, Decision::undecided);
    EXPECT_EQ(dec.status == Decision::yes, tt::barvinok_at_most_oracle(m, 2)) << "trial " << t;
  }
}

TEST(BarvinokDecision, BudgetExhaustionIsReportedNotGuessed) {
  auto d = barvinok_decision(classical_identity(5), 3, {.budget = 2});
  EXPECT_EQ(d.status, Decision::undecided);
  EXPECT_FALSE(d.witness);
  auto r = barvinok_rank(classical_identity(4), {.budget = 1});
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.lo, 2u);
  EXPECT_EQ(r.hi, 4u);
  EXPECT_EQ(trop_matmul(r.witness.x, r.witness.y), classical_identity(4));
}

TEST(BarvinokDecision, SerialAndParallelAgreeAtEveryBudget) {
  auto m = classical_identity(5);
  auto full = barvinok_decision(m, 3, {.budget = 1'000'000, .exec = Execution::serial});
  ASSERT_EQ(full.status, Decision::no);
  for (std::uint64_t b = 1; b <= full.nodes + 2; ++b) {
    auto s = barvinok_decision(m, 3, {.budget = b, .exec = Execution::serial});
    auto p = barvinok_decision(m, 3, {.budget = b, .exec = Execution::parallel});
    EXPECT_EQ(s.status, p.status) << "budget " << b;
    EXPECT_EQ(s.nodes, p.nodes) << "budget " << b;
  }
  std::mt19937_64 rng(36);
  for (int t = 0; t < 40; ++t) {
    auto x = trop_add(trop_matmul(tt::random_matrix(rng, 6, 3, 4, 1), tt::random_matrix(rng, 3, 6, 4, 1)),
                      tt::random_tie_matrix(rng, 6, 6, 5));
    for (std::uint64_t b : {3u, 10u, 50u, 1000000u}) {
      auto s = barvinok_decision(x, 3, {.budget = b, .exec = Execution::serial});
      auto p = barvinok_decision(x, 3, {.budget = b, .exec = Execution::parallel});
      EXPECT_EQ(s.status, p.status);
      EXPECT_EQ(s.nodes, p.nodes);
      if (s.witness && p.witness) {
        EXPECT_EQ(s.witness->x, p.witness->x);
        EXPECT_EQ(s.witness->y, p.witness->y);
      }
    }
  }
}

TEST(BarvinokRank, ClassicalIdentitiesMatchSpernerBound) {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto r = barvinok_rank(classical_identity(n));
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.hi, cn_barvinok_rank(n)) << "n=" << n;
    EXPECT_EQ(trop_matmul(r.witness.x, r.witness.y), classical_identity(n));
  }
  EXPECT_EQ(barvinok_rank(classical_identity(4)).hi, 4u);
}

TEST(BarvinokRank, C6IsFour) {
  auto terms = tt::c6_terms();
  EXPECT_EQ(trop_add(trop_add(terms[0], terms[1]), trop_add(terms[2], terms[3])), classical_identity(6));
  EXPECT_EQ(cn_barvinok_rank(6), 4u);
  auto r = barvinok_rank(classical_identity(6));
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.hi, 4u);
}

TEST(BarvinokRank, SingleRowIsOne) {
  auto r = barvinok_rank(TropMatrix{{3, -1, Rational(1, 2), 7}});
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.hi, 1u);
}

TEST(BarvinokRank2Fast, Examples) {
  EXPECT_TRUE(barvinok_rank2_fast(tt::path_example()));
  EXPECT_FALSE(barvinok_rank2_fast(classical_identity(3)));
  EXPECT_TRUE(barvinok_rank2_fast(trop_matmul(TropMatrix{{0}, {3}, {1}, {2}}, TropMatrix{{1, 5, 2, 0}})));
}

TEST(BarvinokRank2Fast, AgreesWithFullSearch) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 80; ++t) {
    auto d = tt::random_size(rng, 2, 5), n = tt::random_size(rng, 2, 5);
    auto m = t % 2 ? tt::random_tie_matrix(rng, d, n, 1)
                   : trop_add(trop_matmul(tt::random_matrix(rng, d, 2, 4, 1), tt::random_matrix(rng, 2, n, 4, 1)),
                              tt::random_tie_matrix(rng, d, n, 6));
    auto r = barvinok_rank(m);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(barvinok_rank2_fast(m), r.hi <= 2);
    EXPECT_EQ(barvinok_rank2_fast(m, Execution::serial), r.hi <= 2);
  }
}

TEST(CnBarvinokRank, Formula) {
  EXPECT_EQ(cn_barvinok_rank(1), 1u);
  EXPECT_EQ(cn_barvinok_rank(2), 2u);
  EXPECT_EQ(cn_barvinok_rank(3), 3u);
  EXPECT_EQ(cn_barvinok_rank(6), 4u);
  EXPECT_EQ(cn_barvinok_rank(7), 5u);
  EXPECT_EQ(cn_barvinok_rank(36), 8u);
  EXPECT_EQ(cn_barvinok_rank(35), 7u);
}

TEST(KapranovReport, ClassicalIdentityIsExactTwo) {
  auto k = kapranov_report(classical_identity(6));
  EXPECT_TRUE(k.exact);
  EXPECT_EQ(k.lo, 2u);
  EXPECT_EQ(k.hi, 2u);
  EXPECT_EQ(rule_tag(k.rule), "R2");
}

TEST(KapranovReport, FanoIsOnlyBounded) {
  auto k = kapranov_report(tt::fano_printed());
  EXPECT_FALSE(k.exact);
  EXPECT_EQ(k.lo, 3u);
  EXPECT_EQ(rule_tag(k.rule), "none");
  EXPECT_LT(k.lo, static_cast<std::size_t>(tt::kFanoKapranovRankOverC));
  EXPECT_GE(k.hi, static_cast<std::size_t>(tt::kFanoKapranovRankOverC));
}

TEST(KapranovReport, FourByFourIsAlwaysExact) {
  std::mt19937_64 rng(38);
  for (int t = 0; t < 60; ++t) {
    auto m = t % 2 ? tt::random_tie_matrix(rng, 4, 4, 1) : tt::random_matrix(rng, 4, 4);
    auto k = kapranov_report(m);
    EXPECT_TRUE(k.exact);
    EXPECT_EQ(k.lo, tropical_rank(m).rank);
  }
  EXPECT_EQ(rule_tag(kapranov_report(TropMatrix::filled(2, 2, 0)).rule), "R1");
}

TEST(RankReport, ChainAndInvariances) {
  std::mt19937_64 rng(39);
  for (int t = 0; t < 60; ++t) {
    auto d = tt::random_size(rng, 1, 5), n = tt::random_size(rng, 1, 5);
    auto m = t % 2 ? tt::random_tie_matrix(rng, d, n, 1) : tt::random_matrix(rng, d, n);
    auto r = rank_report(m);
    EXPECT_TRUE(rank_chain_holds(r));
    auto tr = rank_report(m.transpose());
    auto sh = rank_report(m.shift_row(0, Rational(5, 2)).shift_column(n - 1, -3));
    for (const auto* o : {&tr, &sh}) {
      EXPECT_EQ(o->tropical.rank, r.tropical.rank);
      EXPECT_EQ(o->barvinok.hi, r.barvinok.hi);
      EXPECT_EQ(o->barvinok.exact, r.barvinok.exact);
      EXPECT_EQ(o->kapranov.lo, r.kapranov.lo);
      EXPECT_EQ(o->kapranov.hi, r.kapranov.hi);
      EXPECT_EQ(o->kapranov.exact, r.kapranov.exact);
    }
  }
}

TEST(RankReport, MinorMonotonicityAndSubadditivity) {
  std::mt19937_64 rng(40);
  for (int t = 0; t < 40; ++t) {
    auto m = tt::random_tie_matrix(rng, 4, 5, 2);
    auto full = rank_report(m);
    std::vector<std::size_t> rows{0, 2, 3}, cols{1, 2, 4};
    auto sub = rank_report(m.submatrix(rows, cols));
    EXPECT_LE(sub.tropical.rank, full.tropical.rank);
    EXPECT_LE(sub.barvinok.hi, full.barvinok.hi);

    auto a = tt::random_tie_matrix(rng, 4, 4, 2), b = tt::random_tie_matrix(rng, 4, 4, 2);
    auto ra = rank_report(a), rb = rank_report(b);
    auto sum = rank_report(trop_add(a, b)), prod = rank_report(trop_matmul(a, b));
    EXPECT_LE(barvinok_rank(trop_add(a, b)).hi, ra.barvinok.hi + rb.barvinok.hi);
    EXPECT_LE(sum.tropical.rank, ra.tropical.rank + rb.tropical.rank);
    EXPECT_LE(prod.barvinok.hi, std::min(ra.barvinok.hi, rb.barvinok.hi));
    EXPECT_LE(prod.tropical.rank, std::min(ra.tropical.rank, rb.tropical.rank));
  }
}
