#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fatpt/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(FATPT_DATA_DIR) + "/" + name; }

Outcome runCli(std::vector<std::string> args) {
  args.insert(args.begin(), "fatpt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = fatpt::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  std::string golden;
  std::vector<std::string> args;
  int code;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

}  // namespace

TEST_P(Golden, MatchesFile) {
  const GoldenCase& c = GetParam();
  Outcome o = runCli(c.args);
  EXPECT_EQ(o.code, c.code) << o.err;
  fs::path file = fs::path(FATPT_GOLDEN_DIR) / c.golden;
  if (std::getenv("FATPT_UPDATE_GOLDEN")) {
    std::ofstream(file) << o.out;
    return;
  }
  ASSERT_TRUE(fs::exists(file)) << file;
  EXPECT_EQ(o.out, slurp(file));
  // Same input, same bytes.
  EXPECT_EQ(runCli(c.args).out, o.out);
}

INSTANTIATE_TEST_SUITE_P(
    Cli, Golden,
    ::testing::Values(
        GoldenCase{"hf_ex27.txt", {"hf", "--scheme", data("ex27.scheme")}, 0},
        GoldenCase{"hf_ex27.json", {"hf", "--scheme", data("ex27.scheme"), "--format", "structured"}, 0},
        GoldenCase{"kaehler_ex44_k2.txt", {"kaehler", "--scheme", data("ex44.scheme"), "-k", "2"}, 0},
        GoldenCase{"kaehler_three_points_k3.json",
                   {"kaehler", "--scheme", data("three_points.scheme"), "-k", "3", "--format", "structured"}, 0},
        GoldenCase{"verify_theorem_ex27.txt", {"verify", "theorem", "--scheme", data("ex27.scheme")}, 0},
        GoldenCase{"verify_product_ex27.json",
                   {"verify", "--claim", "prop-2.6b", "--scheme", data("ex27.scheme"), "--format", "structured"}, 0},
        GoldenCase{"verify_all_p3.txt", {"verify", "all", "--scheme", data("double_points_p3.scheme")}, 0},
        GoldenCase{"verify_lemma_negative.txt",
                   {"verify", "lemma", "--scheme", data("ex34_x.scheme"), "--subset", data("ex34_y.scheme")}, 1},
        GoldenCase{"example_list.txt", {"example"}, 0},
        GoldenCase{"example_ex28.txt", {"example", "ex-2.8"}, 0},
        GoldenCase{"example_ex34.txt", {"example", "ex-3.4"}, 0},
        GoldenCase{"example_rem42.json", {"example", "rem-4.2", "--format", "structured"}, 0},
        GoldenCase{"separators_ex27_p7.txt", {"separators", "--scheme", data("ex27.scheme"), "--point", "7"}, 0}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
      std::string s = info.param.golden;
      for (char& ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
      return s;
    });

TEST(CliErrors, UsageAndInputProblems) {
  EXPECT_EQ(runCli({}).code, 2);
  EXPECT_EQ(runCli({"frobnicate"}).code, 2);
  EXPECT_EQ(runCli({"hf"}).code, 2);
  EXPECT_EQ(runCli({"hf", "--scheme", data("missing.scheme")}).code, 2);
  EXPECT_EQ(runCli({"kaehler", "--scheme", data("ex27.scheme")}).code, 2);
  EXPECT_EQ(runCli({"kaehler", "--scheme", data("ex27.scheme"), "-k", "4"}).code, 2);
  EXPECT_EQ(runCli({"kaehler", "--scheme", data("ex27.scheme"), "-k", "0"}).code, 2);
  EXPECT_EQ(runCli({"example", "ex-9.9"}).code, 2);
  EXPECT_EQ(runCli({"verify", "nonsense", "--scheme", data("ex27.scheme")}).code, 2);
  EXPECT_EQ(runCli({"verify", "p2", "--scheme", data("double_points_p3.scheme")}).code, 2);
  EXPECT_EQ(runCli({"hf", "--scheme", data("ex27.scheme"), "--format", "xml"}).code, 2);
  EXPECT_EQ(runCli({"separators", "--scheme", data("ex27.scheme"), "--point", "9"}).code, 2);
}

TEST(CliErrors, MalformedSchemeFile) {
  fs::path tmp = fs::temp_directory_path() / "fatpt_bad.scheme";
  std::ofstream(tmp) << "n 2\npoint 1 0 mult 1\n";
  Outcome o = runCli({"hf", "--scheme", tmp.string()});
  fs::remove(tmp);
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("line 2"), std::string::npos) << o.err;
  EXPECT_EQ(std::count(o.err.begin(), o.err.end(), '\n'), 1);
}

TEST(CliErrors, FailedVerificationExitsOne) {
  Outcome o = runCli({"verify", "--claim", "lem-3.3", "--scheme", data("ex34_x.scheme"), "--subset",
                      data("ex34_y.scheme"), "--format", "structured"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("\"witness\":{\"d\":4,\"lhs\":11,\"rhs\":15}"), std::string::npos) << o.out;
  EXPECT_EQ(runCli({"verify", "lemma", "--scheme", data("ex34_x.scheme")}).code, 2);
  // Y inside X: the lemma's hypothesis holds and so does the inclusion.
  EXPECT_EQ(runCli({"verify", "lemma", "--scheme", data("ex34_x.scheme"), "--subset", data("ex34_x.scheme")}).code, 0);
}
