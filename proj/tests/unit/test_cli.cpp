#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cli/commands.hpp"
#include "json.hpp"
#include "satfrac/io.hpp"
#include "satfrac/saturation.hpp"

using namespace satfrac;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SATFRAC_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, CheckSaturated) {
  Result r = invoke({"check", data("example_fraction.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "saturated\n");
  EXPECT_EQ(invoke({"check", data("example_fraction.json")}).code, 0);
}

TEST(Cli, CheckNotSaturated) {
  Result r = invoke({"check", data("three_cycle.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not saturated: cycle = [(1,1),(1,3),(2,1),(2,2),(3,2),(3,3)]\n");
}

TEST(Cli, CheckWrongSize) {
  Result r = invoke({"check", "-"}, "110\n011\n000\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("wrong size", 0), 0u);
}

TEST(Cli, CheckMalformedInput) {
  Result r = invoke({"check", data("bad_cell.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cell (2,2)"), std::string::npos);
  EXPECT_EQ(invoke({"check", "/nonexistent/file"}).code, 2);
}

TEST(Cli, CheckOracleJson) {
  Result r = invoke({"check", "--oracle", "--json", data("example_fraction.txt")});
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "ok");
  EXPECT_EQ(doc["payload"]["saturated"], true);
  EXPECT_EQ(doc["payload"]["oracle_agrees"], true);
}

TEST(Cli, TextAndJsonCarrySameFacts) {
  Result text = invoke({"check", data("three_cycle.txt")});
  Result json = invoke({"check", "--json", data("three_cycle.txt")});
  EXPECT_EQ(text.code, json.code);
  auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["status"], "fail");
  EXPECT_EQ(doc["payload"]["verdict"], "not saturated");
  EXPECT_EQ(doc["payload"]["cycle"].size(), 6u);
}

TEST(Cli, Count) {
  EXPECT_EQ(invoke({"count", "--I", "4", "--J", "4"}).out, "4096\n");
  EXPECT_EQ(invoke({"count", "--I", "4", "--J", "4", "--probability"}).out, "4096\n4096/11440 = 0.36\n");
  EXPECT_EQ(invoke({"count", "--margins", "3,2,1,1", "2,2,2,1"}).out, "18\n");
  EXPECT_EQ(invoke({"count", "--margins", "3,2,1,1", "2,2,2"}).code, 1);
  EXPECT_EQ(invoke({"count", "--I", "4", "--J", "3", "--margins", "3,2,1,1", "2,2,2,1"}).code, 1);
  EXPECT_EQ(invoke({"count", "--I", "1", "--J", "3"}).code, 1);
}

TEST(Cli, MatrixAndDet) {
  Result x = invoke({"matrix", "--I", "2", "--J", "2"});
  EXPECT_EQ(x.out, "1 1 1\n1 1 0\n1 0 1\n1 0 0\n");
  Result xf = invoke({"matrix", data("example_fraction.txt")});
  EXPECT_EQ(xf.out.substr(0, 12), "1 1 0 1 0 0\n");
  EXPECT_EQ(invoke({"det", data("example_fraction.txt")}).out, "1\n");
  EXPECT_EQ(invoke({"det", data("three_cycle.txt")}).out, "0\n");
  Result bad = invoke({"det", data("four_cycle.txt")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, EnumerateRoundTrips) {
  for (std::string fmt : {"grid", "json"}) {
    Result r = invoke({"enumerate", "--I", "3", "--J", "3", "--format", fmt});
    EXPECT_EQ(r.code, 0);
    auto parsed = parse_fractions(r.out);
    EXPECT_EQ(parsed, enumerate_saturated(DesignSize(3, 3)));
  }
  Result filtered = invoke({"enumerate", "--margins", "3,1,1", "3,1,1", "--format", "json"});
  EXPECT_EQ(parse_fractions(filtered.out).size(), 1u);
  EXPECT_EQ(invoke({"enumerate", "--I", "4", "--J", "4", "--cap", "10"}).code, 1);
}

TEST(Cli, Generate) {
  Result r = invoke({"generate", "--margins", "4,1,1", "3,1,1,1"});
  EXPECT_EQ(r.out, "3 4\n1111\n1000\n1000\n\n");
}

TEST(Cli, SampleIsDeterministic) {
  std::vector<std::string> args{"sample", "--I", "3", "--J", "3", "--seed", "7", "--count", "2"};
  Result a = invoke(args);
  Result b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto parsed = parse_fractions(a.out);
  ASSERT_EQ(parsed.size(), 2u);
  for (const Fraction& f : parsed) EXPECT_TRUE(is_saturated(f));
  EXPECT_EQ(invoke({"sample", "--I", "3", "--J", "3"}).code, 2);
}

TEST(Cli, DecomposeAndFindCycle) {
  Result d = invoke({"decompose", data("four_cycle.txt")});
  EXPECT_EQ(d.out, "k = 4\nOA1: [(1,1),(2,2),(3,3),(4,4)]\nOA2: [(1,3),(2,4),(3,2),(4,1)]\n");
  EXPECT_EQ(invoke({"decompose", data("three_cycle.txt")}).code, 1);
  EXPECT_EQ(invoke({"find-cycle", data("example_fraction.txt")}).out, "acyclic\n");
  EXPECT_EQ(invoke({"find-cycle", data("three_cycle.txt")}).out, "[(1,1),(1,3),(2,1),(2,2),(3,2),(3,3)]\n");
}

TEST(Cli, Basis) {
  Result r = invoke({"basis", "--I", "3", "--J", "4", "--json"});
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["payload"]["moves"].size(), 42u);
  Result two = invoke({"basis", "--I", "2", "--J", "2"});
  EXPECT_EQ(two.out, "1 -1\n-1 1\n");
  EXPECT_EQ(invoke({"basis", "--I", "5", "--J", "5", "--cap", "10"}).code, 1);
}

TEST(Cli, WalkStreamsFiberStates) {
  std::vector<std::string> args{"walk", "--start", data("fiber_start.txt"), "--steps", "500", "--seed", "4",
                                "--format", "json"};
  Result r = invoke(args);
  EXPECT_EQ(r.code, 0);
  auto states = parse_fractions(r.out);
  EXPECT_EQ(states.size(), 501u);
  std::set<Fraction> distinct(states.begin(), states.end());
  EXPECT_EQ(distinct.size(), 3u);
  EXPECT_EQ(r.out, invoke(args).out);
  Result thinned = invoke({"walk", "--start", data("fiber_start.txt"), "--steps", "100", "--seed", "4",
                           "--burn-in", "10", "--emit-every", "30", "--format", "json"});
  EXPECT_EQ(parse_fractions(thinned.out).size(), 4u);
}

TEST(Cli, FiberAndVerify) {
  Result f = invoke({"fiber", "--margins", "3,1,2", "3,1,1,1", "--format", "json"});
  EXPECT_EQ(parse_fractions(f.out).size(), 3u);
  Result v = invoke({"verify", "--margins", "3,1,2", "3,1,1,1"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out.rfind("connected: 3 tables", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"count", "--I"}).code, 2);
  EXPECT_EQ(invoke({"enumerate", "--I", "3", "--J", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"walk", "--help"}).code, 0);
}
