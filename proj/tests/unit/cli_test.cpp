#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ncca/serialize.hpp"

using ncca::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, Decide) {
  auto yes = run({"decide", "--rules", "192,136,184,252,204,238"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(lines(yes.out).at(0), "yes");
  auto no = run({"decide", "--rules", "252,204,192,136,184,238"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(lines(no.out).at(0), "no");
  EXPECT_EQ(run({"decide", "--rules", "204,204,204,204,204"}).code, 0);
}

TEST(Cli, DecideUsageErrors) {
  auto short_ring = run({"decide", "--rules", "136,252,238,192"});
  EXPECT_EQ(short_ring.code, 2);
  EXPECT_NE(short_ring.err.find("oracle"), std::string::npos);
  EXPECT_EQ(run({"decide", "--rules", "256,1,1,1,1"}).code, 2);
  EXPECT_EQ(run({"decide"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DecideJsonAndTrace) {
  auto json = run({"decide", "--rules", "192,136,184,252,204,238", "--format", "json", "--trace"});
  EXPECT_EQ(json.code, 0);
  const ncca::Verdict v = ncca::verdict_from_json(json.out);
  EXPECT_TRUE(v.accepted());
  EXPECT_EQ(v.trace.size(), 7u);
  auto text = run({"decide", "--rules", "192,136,184,252,204,238", "--trace"});
  EXPECT_EQ(ncca::super_nodes_from_json(text.out.substr(text.out.find('\n') + 1)).size(), 7u);
}

TEST(Cli, SynthesizeIsDeterministicAndAccepted) {
  auto a = run({"synthesize", "--n", "9", "--seed", "5", "--count", "4"});
  auto b = run({"synthesize", "--n", "9", "--seed", "5", "--count", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto vectors = lines(a.out);
  ASSERT_EQ(vectors.size(), 4u);
  for (const auto& rv : vectors) EXPECT_EQ(run({"decide", "--rules", rv}).code, 0) << rv;
  EXPECT_EQ(run({"synthesize", "--n", "4"}).code, 2);
}

TEST(Cli, SynthesizeReplaysSixCell) {
  auto r = run({"synthesize", "--n", "6", "--choices", std::string(NCCA_TEST_DATA_DIR) + "/six_cell.choices"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(0), "192,136,184,252,204,238");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, SynthesizeTraceReplaysThroughJson) {
  auto traced = run({"synthesize", "--n", "7", "--seed", "3", "--trace"});
  ASSERT_EQ(traced.code, 0);
  const std::string vector = lines(traced.out).at(0);
  const std::string json = traced.out.substr(traced.out.find('\n') + 1);
  const auto path = ::testing::TempDir() + "/trace.json";
  {
    std::ofstream f(path);
    f << json;
  }
  auto replay = run({"synthesize", "--n", "7", "--choices", path});
  EXPECT_EQ(lines(replay.out).at(0), vector);
}

TEST(Cli, Oracle) {
  EXPECT_EQ(run({"oracle", "--rules", "136,252,238,192"}).code, 0);
  EXPECT_EQ(run({"oracle", "--rules", "170,240,239,192,204"}).code, 1);
  auto capped = run({"oracle", "--rules", "204,204,204,204,204,204", "--max-cells", "5"});
  EXPECT_EQ(capped.code, 2);
  EXPECT_NE(capped.err.find("limit"), std::string::npos);
}

TEST(Cli, Simulate) {
  auto r = run({"simulate", "--rules", "136,252,238,192", "--init", "1010", "--steps", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"1010", "0110"}));
  auto three = run({"simulate", "--rules", "184,184,184,184,184", "--init", "11000", "--steps", "3"});
  EXPECT_EQ(lines(three.out).size(), 4u);
  EXPECT_EQ(run({"simulate", "--rules", "136,252,238,192", "--init", "101"}).code, 2);
}

TEST(Cli, TreeAndStg) {
  auto dot = run({"tree", "--rules", "136,252,238,192"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph reachability_tree {", 0), 0u);
  auto json = run({"tree", "--rules", "136,252,238,192", "--prune", "--format", "json"});
  EXPECT_TRUE(ncca::tree_from_json(json.out).pruned);
  auto stg = run({"stg", "--rules", "136,252,238,192"});
  EXPECT_EQ(stg.code, 0);
  EXPECT_NE(stg.out.find("\"1010\" -> \"0110\";"), std::string::npos);
  EXPECT_EQ(run({"tree", "--rules", "204,204"}).code, 2);
}

TEST(Cli, Enumerate) {
  auto r = run({"enumerate", "--n", "5", "--jobs", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "125\n");
  auto json = run({"enumerate", "--n", "5", "--alphabet", "204", "--format", "json"});
  EXPECT_EQ(ncca::census_from_json(json.out).count, 1u);
  EXPECT_EQ(run({"enumerate", "--n", "9"}).code, 2);
}
