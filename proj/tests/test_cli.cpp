#include "awgclos/cli.hpp"
#include "awgclos/io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

using namespace awgclos;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string &stdin_text = "") {
  args.insert(args.begin(), "awgclos");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string &s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

const std::string kExample = std::string(AWGCLOS_TEST_DATA) + "/example12_calls.json";

} // namespace

TEST(Cli, BuildMinimalJson) {
  const auto r = run({"build", "--family", "SA", "--n", "1", "--r", "1", "--m", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto art = artifact_from_json(parse_json(r.out));
  EXPECT_EQ(art.topology.nodes().size(), 5u);
  EXPECT_FALSE(art.assignment);
}

TEST(Cli, BuildDotAndCensus) {
  auto r = run({"build", "--family", "B", "--n", "2", "--d", "3", "--format", "dot"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_NE(r.out.find("style=dashed"), std::string::npos);
  r = run({"build", "--family", "B", "--n", "2", "--d", "4", "--format", "table"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("twc columns         7"), std::string::npos);
}

TEST(Cli, RouteExample12File) {
  const auto r = run({"route", "--family", "SA", "--n", "4", "--r", "3", "--m",
                      "4", "--calls", kExample});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out), 13u);
  EXPECT_NE(r.out.find("C11"), std::string::npos);
}

TEST(Cli, RouteEmptyCallSet) {
  const auto r = run({"route", "--family", "SA", "--n", "2", "--r", "2", "--m",
                      "2", "--load", "empty"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out), 1u);
}

TEST(Cli, RouteCallsFromStdin) {
  const auto r = run({"route", "--family", "SA", "--n", "2", "--r", "2", "--m",
                      "2", "--calls", "-"},
                     R"([{"alpha":0,"omega":0,"beta":1,"omega_prime":1}])");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out), 2u);
}

TEST(Cli, RouteThenVerify) {
  const auto routed = run({"route", "--family", "B", "--n", "2", "--d", "3",
                           "--load", "random", "--seed", "7", "--format", "json"});
  ASSERT_EQ(routed.code, kExitOk) << routed.err;
  const auto v = run({"verify", "-"}, routed.out);
  EXPECT_EQ(v.code, kExitOk) << v.out << v.err;
  EXPECT_EQ(v.out.rfind("PASS", 0), 0u);
  const auto vj = run({"verify", "--format", "json"}, routed.out);
  EXPECT_TRUE(parse_json(vj.out).at("ok").get<bool>());
}

// A route copied onto a second call shares every link and wavelength.
TEST(Cli, VerifyForgedDuplicate) {
  const auto routed = run({"route", "--family", "SA", "--n", "2", "--r", "2",
                           "--m", "2", "--calls", "-", "--format", "json"},
                          R"([{"alpha":0,"omega":0,"beta":0,"omega_prime":0}])");
  ASSERT_EQ(routed.code, kExitOk);
  auto j = parse_json(routed.out);
  auto &routes = j["assignment"]["routes"];
  routes.push_back(routes[0]);
  const auto v = run({"verify", "--format", "json"}, j.dump());
  EXPECT_EQ(v.code, kExitFailure);
  const auto rep = parse_json(v.out);
  EXPECT_FALSE(rep.at("ok").get<bool>());
  EXPECT_EQ(rep.at("violations").size(), 1u);
}

TEST(Cli, InfeasibleExitsOne) {
  const auto r = run({"route", "--family", "T", "--n", "2", "--r", "2", "--m", "2"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("infeasible"), std::string::npos);
}

TEST(Cli, BenchB24) {
  const auto r = run({"bench", "--family", "B", "--n", "2", "--d", "4",
                      "--seeds", "100", "--no-diagnostics"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_DOUBLE_EQ(j.at("success_rate").get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j.at("utilization").at("twc").get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j.at("utilization").at("awg_channel").get<double>(), 1.0);
  EXPECT_FALSE(j.contains("diagnostics"));
}

TEST(Cli, BenchZeroSeeds) {
  const auto r = run({"bench", "--family", "SA", "--n", "2", "--r", "2", "--m",
                      "2", "--seeds", "0", "--no-diagnostics"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_TRUE(j.at("success_rate").is_null());
  EXPECT_TRUE(j.at("utilization").is_null());
}

// m = n - 1 central modules cannot carry a full load.
TEST(Cli, BenchUndersizedSA) {
  const auto r = run({"bench", "--family", "SA", "--n", "4", "--r", "3", "--m",
                      "3", "--seeds", "5", "--no-diagnostics"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_DOUBLE_EQ(parse_json(r.out).at("success_rate").get<double>(), 0.0);
}

TEST(Cli, BenchWithoutDiagnosticsIsByteStable) {
  const std::vector<std::string> args = {"bench", "--family", "SB", "--n", "2",
                                         "--d", "3", "--seeds", "8",
                                         "--no-diagnostics"};
  EXPECT_EQ(run(args).out, run(args).out);
  const auto with = run({"bench", "--family", "SB", "--n", "2", "--d", "3",
                         "--seeds", "2"});
  EXPECT_TRUE(parse_json(with.out).contains("diagnostics"));
}

TEST(Cli, Estimate) {
  const auto r = run({"estimate", "--family", "B", "--n", "2", "--d", "4", "--p", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = parse_json(r.out);
  EXPECT_DOUBLE_EQ(j.at("total_penalty_db").get<double>(), 4.0);
  EXPECT_DOUBLE_EQ(j.at("total_insertion_loss_db").get<double>(), 36.0);
  EXPECT_EQ(run({"estimate", "--family", "SA", "--n", "2", "--r", "2", "--m",
                 "2", "--p", "0.5"})
                .code,
            kExitUsage);
}

TEST(Cli, ExportRoutingTable) {
  const auto r = run({"export", "--what", "routing-table", "--r", "3", "--m", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out), 4u);
  EXPECT_NE(r.out.find("i2     L2    L3    L0    L1"), std::string::npos);
  const auto j = run({"export", "--what", "routing-table", "--r", "3", "--m",
                      "4", "--format", "json"});
  ASSERT_EQ(j.code, kExitOk) << j.err;
  EXPECT_NO_THROW(parse_json(j.out));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"build", "--family", "B", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"build", "--family", "SA", "--n", "2", "--r", "2", "--m", "2",
                 "--d", "3"})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"build", "--family", "Q", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"build", "--family", "B", "--n", "0", "--d", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "-"}, "{not json").code, kExitUsage);
  EXPECT_EQ(run({"route", "--family", "SA", "--n", "2", "--r", "2", "--m", "2",
                 "--calls", "/nonexistent/calls.json"})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, LogLevelFromEnvironment) {
  const std::vector<std::string> args = {"route", "--family", "SA", "--n", "2",
                                         "--r", "2", "--m", "2"};
  ::setenv("AWGCLOS_LOG", "debug", 1);
  const auto loud = run(args);
  ::unsetenv("AWGCLOS_LOG");
  const auto quiet = run(args);
  EXPECT_EQ(loud.out, quiet.out);
  EXPECT_FALSE(loud.err.empty());
  EXPECT_TRUE(quiet.err.empty());
}
