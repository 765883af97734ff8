#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <random>
#include <regex>
#include <set>

#include "ncca/error.hpp"
#include "ncca/serialize.hpp"
#include "support.hpp"

using namespace ncca;

TEST(Json, CensusRoundTrip) {
  const Census c = count_ncca_vectors(5);
  EXPECT_EQ(census_from_json(census_to_json(c)), c);
  CensusOptions small;
  small.max_listed = 3;
  const Census without = count_ncca_vectors(5, small);
  const std::string text = census_to_json(without);
  EXPECT_EQ(text.find("accepted_vectors"), std::string::npos);
  EXPECT_EQ(census_from_json(text), without);
}

TEST(Json, SynthesisTraceRoundTrip) {
  const auto result = synthesize(10, 17);
  const std::string text = synthesis_trace_to_json(result.trace);
  EXPECT_EQ(synthesis_trace_from_json(text), result.trace);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j.at("seed").get<std::uint64_t>(), 17u);
  EXPECT_EQ(j.at("n").get<int>(), 10);
  EXPECT_EQ(j.at("rules").size(), 10u);
  EXPECT_EQ(j.at("choices").size(), result.trace.choices().size());
}

TEST(Json, LargeSeedSurvives) {
  const auto result = synthesize(6, ~0ull);
  EXPECT_EQ(synthesis_trace_from_json(synthesis_trace_to_json(result.trace)).seed, ~0ull);
}

TEST(Json, VerdictRoundTrip) {
  for (const RuleVector& rv : {RuleVector{192, 136, 184, 252, 204, 238}, RuleVector{252, 204, 192, 136, 184, 238},
                               RuleVector{170, 240, 239, 192, 204}}) {
    for (bool trace : {false, true}) {
      const Verdict v = decide_ncca(rv, DecideOptions{trace});
      EXPECT_EQ(verdict_from_json(verdict_to_json(v)), v);
    }
  }
  std::mt19937_64 rng(6);
  for (int t = 0; t < 300; ++t) {
    const Verdict v = decide_ncca(test_support::random_vector(rng, 6));
    EXPECT_EQ(verdict_from_json(verdict_to_json(v)), v);
  }
}

TEST(Json, SuperNodeTraceShape) {
  const Verdict v = decide_ncca(RuleVector{192, 136, 184, 252, 204, 238}, DecideOptions{true});
  const std::string text = super_nodes_to_json(v.trace);
  EXPECT_EQ(super_nodes_from_json(text), v.trace);
  const auto j = nlohmann::json::parse(text);
  ASSERT_EQ(j.size(), 7u);
  EXPECT_EQ(j[1]["gamma"][1], nlohmann::json::parse(R"({"4":1,"5":1,"6":1,"7":1})"));
}

TEST(Json, TreeRoundTrip) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    TreeOptions options;
    options.prune = t % 2;
    const auto tree = build_tree(test_support::random_vector(rng, 3 + t % 5), options);
    EXPECT_EQ(tree_from_json(tree_to_json(tree)), tree);
  }
}

TEST(Json, MalformedInputIsRejected) {
  EXPECT_THROW(census_from_json("{"), InvalidInput);
  EXPECT_THROW(census_from_json(R"({"n":5})"), InvalidInput);
  EXPECT_THROW(verdict_from_json(R"({"reason":{"kind":"maybe"}})"), InvalidInput);
  EXPECT_THROW(verdict_from_json(R"({"accepted":true,"reason":{"kind":"step5","level":1,"condition":2}})"),
               InvalidInput);
  EXPECT_THROW(synthesis_trace_from_json(R"({"seed":1,"n":5,"cells":[{"cell":0,"rule":300,"choices":[],"fired":[]}]})"),
               InvalidInput);
}

TEST(Dot, StateTransitionGraph) {
  const std::string dot = stg_to_dot(build_stg(RuleVector{136, 252, 238, 192}));
  const std::regex node(R"re(^  "([01]{4})"( \[style=dashed\])?;$)re");
  const std::regex edge(R"re(^  "([01]{4})" -> "([01]{4})";$)re");
  std::set<std::string> nodes;
  std::set<std::string> targets;
  std::size_t edges = 0;
  std::istringstream lines(dot);
  std::string line;
  std::smatch m;
  while (std::getline(lines, line)) {
    if (std::regex_match(line, m, node)) nodes.insert(m[1]);
    if (std::regex_match(line, m, edge)) {
      ++edges;
      targets.insert(m[2]);
    }
  }
  EXPECT_EQ(nodes.size(), 16u);
  EXPECT_EQ(edges, 16u);
  EXPECT_EQ(16 - targets.size(), 7u);
  EXPECT_NE(dot.find("\"1010\" -> \"0110\";"), std::string::npos);
  EXPECT_EQ(dot, stg_to_dot(build_stg(RuleVector{136, 252, 238, 192})));
}

TEST(Dot, TreeAnnotationsAndDashedEdges) {
  const std::string dot = tree_to_dot(build_tree(RuleVector{136, 252, 238, 192}));
  EXPECT_NE(dot.find("\"N0.0\" [label=\"N0.0\\nΓ0: {0(0),1(0)}\\nΓ1: {2(0),3(0)}\\nΓ2: {4(0),5(0)}\\nΓ3: {6(0),7(0)}\"];"),
            std::string::npos);
  EXPECT_NE(dot.find("\"N1.1\" -> \"X2.2\" [label=\"0\", style=dashed];"), std::string::npos);
  EXPECT_NE(dot.find("\"N0.0\" -> \"N1.0\" [label=\"0\"];"), std::string::npos);
}

TEST(Json, StgShape) {
  const auto j = nlohmann::json::parse(stg_to_json(build_stg(RuleVector{136, 252, 238, 192})));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["states"][10]["state"], "1010");
  EXPECT_EQ(j["states"][10]["next"], "0110");
  EXPECT_EQ(j["states"][10]["predecessors"], 0);
}
