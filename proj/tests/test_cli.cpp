#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "nakayama");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = nakayama::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, AnalyzeTable) {
  const auto r = invoke({"analyze", "--cyclic", "3,4,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gldim          4"), std::string::npos);
  EXPECT_NE(r.out.find("O_A            {1,3,4}"), std::string::npos);
  EXPECT_NE(r.out.find("s-connected    no"), std::string::npos);
  EXPECT_NE(r.out.find("quasi-hered.   no"), std::string::npos);
}

TEST(Cli, AnalyzeJson) {
  const auto r = invoke({"analyze", "--linear", "2,2,2,1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["gldim"], 3);
  EXPECT_EQ(j["relations"]["r"], 3);
  EXPECT_TRUE(j["tower"].is_null());

  const auto s = nlohmann::json::parse(invoke({"analyze", "--cyclic", "2,2", "--format", "json"}).out);
  EXPECT_EQ(s["report"]["gldim"], "inf");
  EXPECT_EQ(s["selfinjective"], true);
}

TEST(Cli, AnalyzeRejectsBadSeries) {
  const auto r = invoke({"analyze", "--cyclic", "5,2,4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ViolatesStep"), std::string::npos);
  EXPECT_EQ(invoke({"analyze", "--cyclic", "--linear", "2,1"}).code, 1);
  EXPECT_EQ(invoke({}).code, 1);
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(invoke({"enumerate", "-n", "4", "--cyclic", "--filter", "maximal"}).out, "8\n");
  EXPECT_EQ(invoke({"enumerate", "-n", "3", "--cyclic", "--filter", "maximal", "--list"}).out,
            "3\n[3,2,2]\n[4,3,2]\n[5,4,3]\n");
  EXPECT_EQ(invoke({"enumerate", "-n", "2", "--linear", "--filter", "maximal", "--list"}).out, "1\n[2,1]\n");
  EXPECT_EQ(invoke({"enumerate", "-n", "1"}).code, 1);
  EXPECT_EQ(invoke({"enumerate", "-n", "3", "--filter", "bogus"}).code, 1);
}

TEST(Cli, Verify) {
  const auto r = invoke({"verify", "--theorems", "fibonacci", "--n-max", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("cyclic: 1,3,8,21 ✓; linear: 1,2,5,13 ✓"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--theorems", "brown", "--n-max", "2"}).code, 0);
  EXPECT_EQ(invoke({"verify", "--theorems", "nonsense"}).code, 1);
  EXPECT_EQ(invoke({"verify", "--n-max", "1"}).code, 1);

  const auto csv = invoke({"verify", "--theorems", "fibonacci", "--n-max", "4", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("4,linear,all,5,5,5,0"), std::string::npos);

  const auto j = nlohmann::json::parse(invoke({"verify", "--theorems", "chain,parity", "--format", "json"}).out);
  EXPECT_EQ(j["chain"]["violations"].size(), 0u);
  EXPECT_GT(j["parity"]["checked"], 0);
}

TEST(Cli, Convert) {
  EXPECT_EQ(invoke({"convert", "--relations", "1:2;2:3", "-n", "4", "--cyclic"}).out, "[4,3,2,2]\n");
  EXPECT_EQ(invoke({"convert", "--kupisch", "3,2,2", "--cyclic"}).out, "1:2;2:3\n");
  EXPECT_EQ(invoke({"convert", "--kupisch", "4,3,2,1", "--linear"}).out, "\n");
  const auto redundant = invoke({"convert", "--relations", "1:3;2:3", "-n", "3"});
  EXPECT_EQ(redundant.code, 1);
  EXPECT_NE(redundant.err.find("Redundant"), std::string::npos);
  EXPECT_EQ(invoke({"convert", "--relations", "1:2"}).code, 1);
  EXPECT_EQ(invoke({"convert", "--kupisch", "2,2", "--relations", "1:2", "-n", "2"}).code, 1);
}
