#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dickson::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("dickson_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, FactorPrintsJson) {
  const Result r = run({"factor", "--p", "13", "--e", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["factors"].size(), 8u);
  EXPECT_EQ(doc["verified"], true);
  EXPECT_EQ(run({"factor", "--p", "3", "--e", "2"}).code, 0);
}

TEST(Cli, BadPrimeIsUsageError) {
  const Result r = run({"factor", "--p", "4", "--e", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("p must be an odd prime"), std::string::npos);
}

TEST(Cli, UnknownFlagsAndCommandsRejected) {
  EXPECT_EQ(run({"factor", "--p", "13", "--bogus"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"factor", "--p", "13", "--search", "sideways"}).code, 1);
  EXPECT_EQ(run({"factor", "--p", "13", "--seed", "-3"}).code, 1);
}

TEST(Cli, HelpListsFlags) {
  const Result r = run({"codes", "--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* flag : {"--p", "--e", "--rank", "--samples", "--seed", "--workers", "--budget",
                           "--symmetry", "--output"}) {
    EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
  }
  const Result f = run({"factor", "--help"});
  for (const char* flag : {"--mode", "--indices", "--search", "--no-verify", "--trace"}) {
    EXPECT_NE(f.out.find(flag), std::string::npos) << flag;
  }
}

TEST(Cli, LiftTrace) {
  const Result r = run({"lift", "--p", "19", "--e", "3", "--indices", "1", "--trace"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["mode"], "targeted");
  EXPECT_EQ(doc["indices"], nlohmann::json::array({1}));
  EXPECT_EQ(doc["trace"][0]["s"].size(), 3u);
  EXPECT_EQ(run({"lift", "--p", "19", "--e", "3", "--indices", "9"}).code, 1);
}

TEST(Cli, VerifyExitCodes) {
  const std::string good = temp_path("good.json");
  ASSERT_EQ(run({"factor", "--p", "13", "--e", "2", "--output", good}).code, 0);
  EXPECT_EQ(run({"verify", "--input", good}).code, 0);

  auto doc = nlohmann::json::parse(slurp(good));
  doc["factors"][3]["coeffs"][1] = doc["factors"][3]["coeffs"][1].get<int>() + 13;
  const std::string bad = temp_path("bad.json");
  std::ofstream(bad) << doc.dump();
  EXPECT_EQ(run({"verify", "--input", bad}).code, 2);

  const std::string broken = temp_path("broken.json");
  std::ofstream(broken) << "{\"p\": 13, ";
  EXPECT_EQ(run({"verify", "--input", broken}).code, 1);
  EXPECT_EQ(run({"verify", "--input", temp_path("missing.json")}).code, 1);
  for (const auto& f : {good, bad, broken}) std::remove(f.c_str());
}

TEST(Cli, BenchSweep) {
  const Result r = run({"bench", "--p", "13,31", "--e", "1..2", "--reps", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "p,e,engine_ms,baseline_ms,ratio");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 4);
  EXPECT_EQ(run({"bench", "--pmin", "2003", "--pmax", "101"}).code, 1);
  EXPECT_EQ(run({"bench", "--p", "13", "--e", "3..1"}).code, 1);
}

TEST(Cli, CodesCsvAndErrors) {
  const Result r = run({"codes", "--p", "13", "--rank", "1", "--workers", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("13,1,2,253,intact,168,exhaustive"), std::string::npos);
  EXPECT_EQ(run({"codes", "--p", "13", "--rank", "5..2"}).code, 1);
  EXPECT_EQ(run({"codes", "--p", "13", "--rank", "abc"}).code, 1);
  EXPECT_EQ(run({"codes", "--p", "13", "--rank", "0..2"}).code, 1);
  EXPECT_EQ(run({"codes", "--p", "13", "--e", "3", "--rank", "1"}).code, 1);
  EXPECT_EQ(run({"codes", "--p", "13"}).code, 1);
}

TEST(Cli, CodesDeterministicAcrossWorkers) {
  const std::string a = temp_path("a.csv"), b = temp_path("b.csv");
  ASSERT_EQ(run({"codes", "--p", "7", "--symmetry", "--workers", "1", "--output", a}).code, 0);
  ASSERT_EQ(run({"codes", "--p", "7", "--symmetry", "--workers", "3", "--output", b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  const Result s1 = run({"codes", "--p", "13", "--rank", "11..12", "--samples", "20000",
                         "--seed", "5", "--workers", "1"});
  const Result s2 = run({"codes", "--p", "13", "--rank", "11..12", "--samples", "20000",
                         "--seed", "5", "--workers", "2"});
  ASSERT_EQ(s1.code, 0) << s1.err;
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_NE(s1.out.find("sampled"), std::string::npos);
  std::remove(a.c_str());
  std::remove(b.c_str());
}
