// Runs the nine acceptance criteria and prints one PASS/FAIL line each.
// Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ncca/decide.hpp"
#include "ncca/oracle.hpp"
#include "ncca/rtree.hpp"
#include "ncca/synth.hpp"
#include "support.hpp"

using namespace ncca;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Vectors shared between criteria.
struct Corpus {
  std::vector<RuleVector> exhaustive5;
  std::vector<RuleVector> random;  // 1000 each for n = 5, 6, 7
  std::vector<RuleVector> synthesized;
};

Corpus& corpus() {
  static Corpus c = [] {
    Corpus out;
    const auto alphabet = test_support::nc_alphabet();
    for (std::uint64_t idx = 0; idx < test_support::power(9, 5); ++idx)
      out.exhaustive5.push_back(test_support::vector_at(idx, 5, alphabet));
    std::mt19937_64 rng(20240501);
    for (int n = 5; n <= 7; ++n)
      for (int t = 0; t < 1000; ++t) out.random.push_back(test_support::random_vector(rng, n));
    for (int n = 5; n <= 12; ++n)
      for (std::uint64_t seed = 0; seed < 100; ++seed) out.synthesized.push_back(synthesize(n, seed).rules);
    return out;
  }();
  return c;
}

Outcome worked_examples() {
  Outcome o;
  auto expect = [&o](bool got, bool want, const std::string& what) {
    if (got != want) {
      o.pass = false;
      o.detail += what + " ";
    }
  };
  expect(decide_ncca(RuleVector{192, 136, 184, 252, 204, 238}).accepted(), true, "decide<192,...>");
  expect(decide_ncca(RuleVector{252, 204, 192, 136, 184, 238}).accepted(), false, "decide<252,...>");
  expect(brute_force_is_ncca(RuleVector{136, 252, 238, 192}), true, "oracle<136,...>");
  expect(brute_force_is_ncca(RuleVector{170, 240, 238, 192, 204}), true, "oracle<...238...>");
  expect(brute_force_is_ncca(RuleVector{170, 240, 239, 192, 204}), false, "oracle<...239...>");
  if (o.pass) o.detail = "5/5 verdicts match";
  return o;
}

Outcome rule_classification() {
  Outcome o;
  std::set<unsigned> nc;
  for (unsigned w = 0; w < 256; ++w)
    if (is_nc_rule(RuleTable(static_cast<std::uint8_t>(w)))) nc.insert(w);
  if (nc != std::set<unsigned>{136, 170, 184, 192, 204, 226, 238, 240, 252}) {
    o.pass = false;
    o.detail = "rule filter gave " + std::to_string(nc.size()) + " rules";
    return o;
  }
  std::vector<RuleTable> alphabet = test_support::nc_alphabet();
  for (auto w : kFourCellOnlyRules) alphabet.emplace_back(w);
  std::set<unsigned> used;
  for (std::uint64_t idx = 0; idx < test_support::power(alphabet.size(), 4); ++idx) {
    const RuleVector rv = test_support::vector_at(idx, 4, alphabet);
    if (brute_force_is_ncca(rv))
      for (auto r : rv.rules()) used.insert(r.wolfram());
  }
  int certified = 0;
  for (auto w : kFourCellOnlyRules) certified += used.count(w) ? 1 : 0;
  o.pass = certified == 6;
  o.detail = "9 conserving rules; " + std::to_string(certified) + "/6 four-cell rules certified";
  return o;
}

Outcome exhaustive_equivalence() {
  int disagreements = 0;
  for (const auto& rv : corpus().exhaustive5) disagreements += decide_ncca(rv).accepted() != brute_force_is_ncca(rv);
  return {disagreements == 0, std::to_string(corpus().exhaustive5.size()) + " vectors, " +
                                  std::to_string(disagreements) + " disagreements"};
}

Outcome random_equivalence() {
  int disagreements = 0;
  for (const auto& rv : corpus().random) disagreements += decide_ncca(rv).accepted() != brute_force_is_ncca(rv);
  return {disagreements == 0,
          std::to_string(corpus().random.size()) + " vectors, " + std::to_string(disagreements) + " disagreements"};
}

Outcome tree_agreement() {
  int disagreements = 0;
  std::size_t checked = 0;
  auto check = [&](const RuleVector& rv) {
    const bool truth = brute_force_is_ncca(rv);
    const bool fast = decide_ncca(rv).accepted();
    const bool full = tree_decide_ncca(rv, false).accepted();
    const bool pruned = tree_decide_ncca(rv, true).accepted();
    disagreements += !(truth == fast && fast == full && full == pruned);
    ++checked;
  };
  for (const auto& rv : corpus().exhaustive5) check(rv);
  for (const auto& rv : corpus().random) check(rv);
  return {disagreements == 0, std::to_string(checked) + " vectors, " + std::to_string(disagreements) + " disagreements"};
}

Outcome synthesis_soundness() {
  int bad = 0;
  for (const auto& rv : corpus().synthesized) bad += !(decide_ncca(rv).accepted() && brute_force_is_ncca(rv));
  ReplayChoices replay(RuleTable(192), {0, 0, 0, 1, 0});
  const RuleVector example = synthesize(6, replay).rules;
  const bool replay_ok = example == RuleVector{192, 136, 184, 252, 204, 238};
  return {bad == 0 && replay_ok, std::to_string(corpus().synthesized.size()) + " vectors, " + std::to_string(bad) +
                                     " rejected; replay gave <" + example.to_string() + ">"};
}

Outcome weight_domain() {
  std::size_t runs = 0;
  int violations = 0;
  auto scan = [&](const RuleVector& rv) {
    const Verdict v = decide_ncca(rv, DecideOptions{true});
    if (!v.accepted()) return;
    ++runs;
    for (const auto& node : v.trace) violations += check_weight_domain(node).has_value();
  };
  for (const auto& rv : corpus().exhaustive5) scan(rv);
  for (const auto& rv : corpus().random) scan(rv);
  for (const auto& rv : corpus().synthesized) scan(rv);

  // Path 4,0,1,2 of configuration 0001 lies in gamma_2 along nodes 0,0,0,1 and ends in leaf 2.
  const auto tree = build_tree(RuleVector{136, 252, 238, 192});
  const std::uint64_t path[4] = {0, 0, 0, 1};
  const unsigned rmts[4] = {4, 0, 1, 2};
  const int weights[4] = {0, 0, 0, -1};
  bool path_ok = true;
  for (int level = 0; level < 4; ++level) {
    const TreeNode* node = tree.find(level, path[level]);
    path_ok = path_ok && node && node->gamma[2].find(Rmt(rmts[level])) == weights[level];
  }
  bool leaves_zero = tree.violations.empty();
  for (const auto& leaf : tree.levels.back().nodes)
    for (const auto& g : leaf.gamma)
      for (Rmt r : g.rmts()) leaves_zero = leaves_zero && g.weight(r) == 0;
  return {violations == 0 && path_ok && leaves_zero,
          std::to_string(runs) + " accepted runs, " + std::to_string(violations) + " out-of-table weights; path " +
              (path_ok ? "0,0,0,-1" : "wrong") + "; leaves " + (leaves_zero ? "all 0" : "non-zero")};
}

Outcome linear_scaling() {
  const std::vector<int> sizes = {1000, 10000, 100000, 1000000};
  std::vector<double> xs;
  std::vector<double> ys;
  bool all_accepted = true;
  for (int n : sizes) {
    const RuleVector rv = synthesize(n, static_cast<std::uint64_t>(n)).rules;
    const int reps = n >= 1000000 ? 7 : 15;
    std::vector<double> times;
    for (int r = 0; r < reps; ++r) {
      const auto start = Clock::now();
      const bool ok = decide_ncca(rv).accepted();
      times.push_back(seconds_since(start));
      all_accepted = all_accepted && ok;
    }
    std::sort(times.begin(), times.end());
    xs.push_back(n);
    ys.push_back(times[times.size() / 2]);
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 0.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "median %.4f s at n=1e6, R^2 = %.5f", ys.back(), r2);
  return {all_accepted && ys.back() < 1.0 && r2 >= 0.99, buf};
}

Outcome rotation_invariance() {
  int changes = 0;
  for (const auto& rv : corpus().exhaustive5) {
    const bool base = decide_ncca(rv).accepted();
    for (std::size_t k = 1; k < rv.size(); ++k) changes += decide_ncca(rv.rotated(k)).accepted() != base;
  }
  return {changes == 0, std::to_string(corpus().exhaustive5.size() * 4) + " rotations, " + std::to_string(changes) +
                            " verdict changes"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked-example regression", 1.0, worked_examples},
      {2, "rule classification", 10.0, rule_classification},
      {3, "exhaustive oracle equivalence (n=5)", 60.0, exhaustive_equivalence},
      {4, "randomized oracle equivalence (n=5,6,7)", 60.0, random_equivalence},
      {5, "tree / algorithm / oracle agreement", 300.0, tree_agreement},
      {6, "synthesis soundness", 60.0, synthesis_soundness},
      {7, "weight-domain property", 0.0, weight_domain},
      {8, "linear scaling", 0.0, linear_scaling},
      {9, "rotation invariance", 0.0, rotation_invariance},
  };

  // Build the shared vectors up front so their cost is not charged to one criterion.
  const auto prep = Clock::now();
  corpus();
  std::printf("corpus ready in %.2f s\n", seconds_since(prep));

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o = c.run();
    const double elapsed = seconds_since(start);
    if (c.limit_seconds > 0 && elapsed >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    failures += !o.pass;
    std::printf("criterion %d %s: %s (%.2f s) %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", elapsed, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
