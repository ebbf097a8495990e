#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(TROPRANK_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("troprank_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(Cli, RankAllOnPathExample) {
  auto f = write("m.csv", "0,4,2\n2,1,0\n2,4,3\n");
  Outcome r = run("rank " + f + " --kind all");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["tropical"], 2);
  EXPECT_EQ(j["barvinok"], 2);
  EXPECT_EQ(j["kapranov"], json({{"lo", 2}, {"hi", 2}, {"exact", true}, {"rule", "R2"}}));
  EXPECT_EQ(j["barvinok_certificate"]["witness"]["x"].size(), 3u);
}

TEST_F(Cli, DetReportsBothPermutations) {
  auto f = write("m.json", R"({"rows":3,"cols":3,"entries":[["0","4","2"],["2","1","0"],["2","4","3"]]})");
  Outcome r = run("det " + f);
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["value"], "4");
  EXPECT_EQ(j["singular"], true);
  EXPECT_EQ(j["sigma"], json({1, 2, 3}));
  EXPECT_EQ(j["sigma2"], json({1, 3, 2}));
}

TEST_F(Cli, CnBarvinok) {
  Outcome r = run("cn 6 --barvinok");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["barvinok"], 4);
  EXPECT_EQ(j["search"]["hi"], 4);
  EXPECT_EQ(j["search"]["exact"], true);
}

TEST_F(Cli, FanoPipeline) {
  Outcome r = run("matroid fano --cocircuit-matrix | " + std::string(TROPRANK_CLI) + " rank --kind tropical");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["tropical"], 3);
}

TEST_F(Cli, MatroidReport) {
  Outcome r = run("matroid uniform --params 4,2");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["cocircuits"].size(), 4u);
  EXPECT_EQ(run("matroid vamos").code, 2);
}

TEST_F(Cli, LiftVerify) {
  auto f = write("c4.csv", "1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1\n");
  Outcome r = run("lift " + f + " --rank2 --verify");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["verified"]["valuation_matches"], true);
  EXPECT_EQ(j["verified"]["lift_rank"], 2);
  Outcome b = run("lift " + f + " --barvinok --verify");
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(json::parse(b.out)["rank_at_most"], 4);
}

TEST_F(Cli, SolveAndHull) {
  auto m = write("m.csv", "0,4,2\n2,1,0\n2,4,3\n");
  auto b = write("b.csv", "0\n1\n2\n");
  Outcome s = run("solve " + m + " " + b);
  ASSERT_EQ(s.code, 0);
  EXPECT_TRUE(json::parse(s.out).contains("status"));
  auto svg = (dir_ / "h.svg").string();
  Outcome h = run("hull " + m + " --cells --svg " + svg);
  ASSERT_EQ(h.code, 0);
  json j = json::parse(h.out);
  EXPECT_EQ(j["dim"], 1);
  EXPECT_EQ(j["cells"].size(), 7u);
  EXPECT_TRUE(fs::exists(svg));
}

TEST_F(Cli, ErrorExitCodes) {
  EXPECT_EQ(run("rank " + (dir_ / "missing.csv").string()).code, 2);
  EXPECT_EQ(run("det " + write("bad.csv", "1,2\n3,oops\n")).code, 2);
  EXPECT_EQ(run("det " + write("rect.csv", "1,2\n")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, BudgetExhaustionPrintsBounds) {
  auto f = write("c6.csv", "1,0,0,0,0,0\n0,1,0,0,0,0\n0,0,1,0,0,0\n0,0,0,1,0,0\n0,0,0,0,1,0\n0,0,0,0,0,1\n");
  Outcome r = run("rank " + f + " --kind barvinok", "TROPRANK_BUDGET=1");
  ASSERT_EQ(r.code, 3);
  json j = json::parse(r.out);
  EXPECT_EQ(j["barvinok"]["hi"], 6);
  EXPECT_LE(j["barvinok"]["lo"], 4);
}

}  // namespace
