#include "troprank/io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <regex>

#include "support/fixtures.hpp"
#include "support/random_matrix.hpp"
#include "troprank/convex.hpp"
#include "troprank/errors.hpp"
#include "troprank/svg.hpp"

namespace troprank {
namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = haystack.find(needle); p != std::string::npos; p = haystack.find(needle, p + 1)) ++n;
  return n;
}

TEST(Csv, ParsesRationalCells) {
  TropMatrix m = parse_csv("3, -1/2\n0.25,+7\n\n");
  EXPECT_EQ(m, (TropMatrix{{3, Rational(-1, 2)}, {Rational(1, 4), 7}}));
}

TEST(Csv, ReportsPositionOfBadCell) {
  try {
    parse_csv("1,2\n3,x\n");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("row 2, column 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_csv("1,2\n3\n"), ShapeError);
  EXPECT_THROW(parse_csv("1/0\n"), DomainError);
  EXPECT_THROW(parse_csv(""), ShapeError);
}

TEST(Json, ParsesStringsAndIntegers) {
  TropMatrix m = parse_json(R"({"rows": 2, "cols": 2, "entries": [["1/3", 2], ["-4", "0"]]})");
  EXPECT_EQ(m, (TropMatrix{{Rational(1, 3), 2}, {-4, 0}}));
}

TEST(Json, RejectsBadInput) {
  try {
    parse_json(R"({"entries": [["1", 0.5]]})");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("row 1, column 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_json(R"({"rows": 3, "entries": [["1"]]})"), ShapeError);
  EXPECT_THROW(parse_json(R"({"entries": [["1"], ["1", "2"]]})"), ShapeError);
  EXPECT_THROW(parse_json("{"), DomainError);
}

TEST(MatrixFile, RoundTripsBothFormats) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    TropMatrix m = testing::random_matrix(rng, testing::random_size(rng, 1, 5), testing::random_size(rng, 1, 5));
    auto j = parse_matrix(to_json(m));
    EXPECT_EQ(j.format, MatrixFormat::json);
    EXPECT_EQ(j.matrix, m);
    EXPECT_EQ(to_json(j.matrix), to_json(m));
    auto c = parse_matrix(to_csv(m));
    EXPECT_EQ(c.format, MatrixFormat::csv);
    EXPECT_EQ(c.matrix, m);
  }
}

TEST(MatrixFile, MissingFileIsDomainError) {
  EXPECT_THROW(read_matrix_file("/nonexistent/matrix.csv"), DomainError);
}

TEST(Svg, PathExampleDrawsSegments) {
  std::string svg = render_hull_svg(testing::path_example());
  EXPECT_EQ(count(svg, "<polygon"), 0u);
  EXPECT_EQ(count(svg, "<line"), 3u);
  EXPECT_EQ(count(svg, "<circle"), 4u);
  EXPECT_EQ(count(svg, "generator"), 4u);  // 3 circles plus the style rule
  EXPECT_EQ(svg, render_hull_svg(testing::path_example()));
}

TEST(Svg, SingleColumnIsOneDot) {
  std::string svg = render_hull_svg(TropMatrix{{0}, {1}, {2}});
  EXPECT_EQ(count(svg, "<circle"), 1u);
  EXPECT_EQ(count(svg, "<line"), 0u);
}

TEST(Svg, InventoryMatchesCellCounts) {
  std::mt19937_64 rng(17);
  int with_polygon = 0;
  for (int trial = 0; trial < 30; ++trial) {
    TropMatrix m = testing::random_matrix(rng, 3, testing::random_size(rng, 2, 5));
    auto cells = enumerate_hull_cells(m);
    std::size_t by_dim[3] = {0, 0, 0};
    for (const auto& c : cells) ++by_dim[c.dim];
    std::string svg = render_hull_svg(m);
    EXPECT_EQ(count(svg, "<circle"), by_dim[0]);
    EXPECT_EQ(count(svg, "<line"), by_dim[1]);
    EXPECT_EQ(count(svg, "<polygon"), by_dim[2]);
    with_polygon += by_dim[2] > 0;
  }
  EXPECT_GT(with_polygon, 0);
}

TEST(Svg, PolygonVerticesAreDistinctAndAtLeastThree) {
  TropMatrix m{{0, 0, 0}, {0, 2, 5}, {0, 4, 1}};
  std::string svg = render_hull_svg(m);
  std::smatch match;
  ASSERT_TRUE(std::regex_search(svg, match, std::regex("<polygon class=\"cell\" points=\"([^\"]*)\"")));
  EXPECT_GE(count(match[1].str(), ",") , 3u);
}

TEST(Svg, RequiresThreeRows) { EXPECT_THROW(render_hull_svg(TropMatrix{{0, 1}, {1, 0}}), DomainError); }

}  // namespace
}  // namespace troprank
