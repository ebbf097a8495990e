#include "troprank/matroids.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

#include "support/fixtures.hpp"
#include "troprank/core.hpp"
#include "troprank/errors.hpp"
#include "troprank/lifts.hpp"
#include "troprank/rank.hpp"

namespace troprank {
namespace {

std::vector<TropVector> sorted_columns(const TropMatrix& m) {
  std::vector<TropVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  std::sort(cols.begin(), cols.end());
  return cols;
}

RationalMatrix to_rational(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix a;
  for (const auto& r : rows) {
    a.emplace_back();
    for (long v : r) a.back().emplace_back(v);
  }
  return a;
}

TEST(Matroid, UniformThreeTwo) {
  Matroid m = matroid_from_bases(3, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(m.rank(), 2u);
  EXPECT_EQ(m.cocircuits(), (std::vector<ElementSet>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_TRUE(m.loops().empty());
}

TEST(Matroid, LoopIsReported) {
  Matroid m = matroid_from_bases(2, {{1}});
  EXPECT_EQ(m.loops(), ElementSet{2});
  EXPECT_EQ(m.rank_of({2}), 0u);
  EXPECT_EQ(m.closure({1}), (ElementSet{1, 2}));
  TropMatrix c = cocircuit_matrix(m);
  EXPECT_EQ(c.row(1), (TropVector{1}));
}

TEST(Matroid, ExchangeViolationNamesThePair) {
  try {
    matroid_from_bases(4, {{1, 2}, {3, 4}});
    FAIL() << "expected a DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("{1,2} and {3,4}"), std::string::npos) << e.what();
  }
  EXPECT_THROW(matroid_from_bases(3, {{1, 2}, {3}}), DomainError);
  EXPECT_THROW(matroid_from_bases(3, {{1, 4}}), DomainError);
  EXPECT_THROW(matroid_from_bases(3, {}), DomainError);
}

TEST(Matroid, UniformRankTwoGivesClassicalIdentity) {
  for (std::size_t n = 2; n <= 7; ++n) {
    Matroid m = uniform_matroid(n, 2);
    EXPECT_EQ(m.cocircuits().size(), n);
    for (const auto& c : m.cocircuits()) EXPECT_EQ(c.size(), n - 1);
    EXPECT_EQ(sorted_columns(cocircuit_matrix(m)), sorted_columns(classical_identity(n)));
  }
}

TEST(Matroid, UniformColumnsHaveRMinusOneOnes) {
  Matroid m = uniform_matroid(6, 4);
  TropMatrix c = cocircuit_matrix(m);
  EXPECT_EQ(c.cols(), 20u);
  for (std::size_t j = 0; j < c.cols(); ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < c.rows(); ++i) ones += c(i, j) == 1;
    EXPECT_EQ(ones, 3);
  }
}

TEST(Matroid, FanoMatchesPrintedMatrix) {
  Matroid f = builtin("fano");
  EXPECT_EQ(f.rank(), 3u);
  EXPECT_EQ(f.bases().size(), 28u);
  ASSERT_EQ(f.cocircuits().size(), 7u);
  for (const auto& c : f.cocircuits()) EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(sorted_columns(cocircuit_matrix(f)), sorted_columns(testing::fano_printed()));
}

TEST(Matroid, NonFanoHasNineCocircuits) {
  Matroid m = builtin("non_fano");
  EXPECT_EQ(m.rank(), 3u);
  EXPECT_EQ(m.cocircuits().size(), 9u);
}

TEST(Matroid, BuiltinRejectsUnknownNames) {
  EXPECT_THROW(builtin("vamos"), DomainError);
  EXPECT_THROW(builtin("uniform", {3}), DomainError);
  EXPECT_THROW(builtin("uniform", {2, 3}), DomainError);
  EXPECT_EQ(builtin("uniform", {4, 2}).cocircuits().size(), 4u);
}

TEST(Matroid, CocircuitsAreAntichainOfNonemptySets) {
  for (const auto& m : {builtin("fano"), builtin("non_fano"), uniform_matroid(5, 3)}) {
    const auto& cs = m.cocircuits();
    for (const auto& a : cs) {
      EXPECT_FALSE(a.empty());
      for (const auto& b : cs)
        if (a != b) EXPECT_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
}

TEST(Matroid, ConcurrentCocircuitReadsAgree) {
  Matroid m = builtin("non_fano");
  std::vector<std::size_t> sizes(8);
  std::vector<std::thread> threads;
  for (std::size_t k = 0; k < sizes.size(); ++k)
    threads.emplace_back([&, k] { sizes[k] = m.cocircuits().size(); });
  for (auto& t : threads) t.join();
  for (auto s : sizes) EXPECT_EQ(s, 9u);
}

TEST(Matroid, TropicalRankOfCocircuitMatrixIsMatroidRank) {
  std::vector<Matroid> ms{builtin("fano"), builtin("non_fano")};
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t r = 1; r <= n; ++r) ms.push_back(uniform_matroid(n, r));
  for (const auto& m : ms) {
    TropMatrix c = cocircuit_matrix(m);
    EXPECT_EQ(tropical_rank(c).rank, m.rank());
    EXPECT_EQ(tropical_rank_01(c), m.rank());
  }
}

TEST(RepresentationLift, NonFanoFromElementVectors) {
  Matroid m = builtin("non_fano");
  auto v = to_rational({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  PuiseuxMatrix f = representation_lift(m, v);
  EXPECT_EQ(valuation_matrix(f), cocircuit_matrix(m));
  EXPECT_EQ(lift_rank(f), 3u);
}

TEST(RepresentationLift, UniformThreeTwoLiftsClassicalIdentity) {
  Matroid m = uniform_matroid(3, 2);
  PuiseuxMatrix f = representation_lift(m, to_rational({{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(sorted_columns(valuation_matrix(f)), sorted_columns(classical_identity(3)));
  EXPECT_EQ(lift_rank(f), 2u);
}

TEST(RepresentationLift, AcceptsCocircuitIndexedColumns) {
  Matroid m = uniform_matroid(3, 2);
  // cocircuits {1,2},{1,3},{2,3}
  PuiseuxMatrix f = representation_lift(m, to_rational({{1, 1, 0}, {-1, 0, 1}, {0, -1, -1}}));
  EXPECT_EQ(valuation_matrix(f), cocircuit_matrix(m));
  EXPECT_EQ(lift_rank(f), 2u);
}

TEST(RepresentationLift, FanoHasNoRationalRepresentation) {
  auto v = to_rational({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  EXPECT_THROW(representation_lift(builtin("fano"), v), DomainError);
  auto w = to_rational({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}});
  EXPECT_THROW(representation_lift(builtin("fano"), w), DomainError);
}

TEST(RepresentationLift, RejectsMismatchedShapes) {
  EXPECT_THROW(representation_lift(uniform_matroid(3, 2), to_rational({{1, 0}, {0, 1}})), ShapeError);
  EXPECT_THROW(representation_lift(uniform_matroid(3, 2), to_rational({{1, 0}, {0, 1}, {2, 0}})), DomainError);
}

}  // namespace
}  // namespace troprank
