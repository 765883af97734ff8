#include "ncca/decide.hpp"

#include <array>
#include <string>

#include "ncca/error.hpp"

namespace ncca {

namespace {

// "W_k[r] = w  =>  rule[r] = b"; vacuous when r is not in gamma_k.
struct Implication {
  int k;
  unsigned r;
  int w;
  unsigned b;
};

// Condition id -> one or two implications (the second has k = -1 when unused).
constexpr std::array<std::array<Implication, 2>, 16> kStep5 = {{
    {{{0, 2, -1, 0}, {-1, 0, 0, 0}}},
    {{{0, 4, 0, 0}, {0, 4, 1, 1}}},
    {{{0, 5, 1, 1}, {-1, 0, 0, 0}}},
    {{{0, 6, -1, 0}, {0, 6, 1, 1}}},
    {{{1, 2, -1, 0}, {-1, 0, 0, 0}}},
    {{{1, 3, -1, 0}, {1, 3, 1, 1}}},
    {{{1, 4, 0, 0}, {1, 4, 2, 1}}},
    {{{1, 5, 2, 1}, {-1, 0, 0, 0}}},
    {{{2, 2, -2, 0}, {-1, 0, 0, 0}}},
    {{{2, 3, -2, 0}, {2, 3, 0, 1}}},
    {{{2, 4, -1, 0}, {2, 4, 1, 1}}},
    {{{2, 5, 1, 1}, {-1, 0, 0, 0}}},
    {{{3, 1, -1, 0}, {3, 1, 1, 1}}},
    {{{3, 2, -1, 0}, {-1, 0, 0, 0}}},
    {{{3, 3, -1, 0}, {3, 3, 0, 1}}},
    {{{3, 5, 1, 1}, {-1, 0, 0, 0}}},
}};

bool holds(const Implication& c, const SuperNode& node, RuleTable rule) {
  if (c.k < 0) return true;
  const Rmt r = Rmt::unchecked(c.r);
  return !node[c.k].has(c.r, c.w) || rule.lookup(r) == c.b;
}

unsigned bit(RuleTable rule, unsigned r) { return rule.lookup(Rmt::unchecked(r)); }

std::string rmt_in_gamma(Rmt r, int k) {
  return "RMT " + std::to_string(r.value()) + " in gamma_" + std::to_string(k);
}

}  // namespace

std::optional<int> check_step5(const SuperNode& node, RuleTable rule) {
  for (std::size_t id = 0; id < kStep5.size(); ++id)
    for (const auto& c : kStep5[id])
      if (!holds(c, node, rule)) return static_cast<int>(id) + 1;
  return std::nullopt;
}

std::optional<Step6Failure> check_step6(const SuperNode& node, RuleTable rule) {
  for (int k = 0; k < 4; ++k) {
    const WeightedSet& g = node[k];
    auto both = [&g](unsigned a, unsigned b) {
      return g.contains(Rmt::unchecked(a)) && g.contains(Rmt::unchecked(b));
    };
    auto w = [&g](unsigned r) { return g.weight(Rmt::unchecked(r)); };
    if (both(0, 4)) {
      if (w(4) == w(0) && bit(rule, 4) != 0) return Step6Failure{1, k};
      if (w(4) > w(0) && bit(rule, 4) != 1) return Step6Failure{2, k};
    }
    if (both(1, 5) && w(5) > w(1) && !(bit(rule, 5) == 1 && bit(rule, 1) == 0)) return Step6Failure{3, k};
    if (both(3, 7)) {
      if (w(3) == w(7) && bit(rule, 3) != 1) return Step6Failure{4, k};
      if (w(3) < w(7) && bit(rule, 3) != 0) return Step6Failure{5, k};
    }
    if (both(2, 6) && w(2) < w(6) && !(bit(rule, 2) == 0 && bit(rule, 6) == 1)) return Step6Failure{6, k};
  }
  return std::nullopt;
}

std::string roman(int value) {
  static const char* const kNames[] = {"i",  "ii",  "iii",  "iv", "v",   "vi",  "vii", "viii",
                                       "ix", "x",   "xi",   "xii", "xiii", "xiv", "xv", "xvi"};
  if (value < 1 || value > 16) return std::to_string(value);
  return kNames[value - 1];
}

std::string Verdict::describe() const {
  struct Visitor {
    std::string operator()(const Accepted&) const { return "number conserving"; }
    std::string operator()(const NonNcRule& r) const {
      return "rule " + std::to_string(r.rule.wolfram()) + " at cell " + std::to_string(r.cell) +
             " is not a number-conserving rule";
    }
    std::string operator()(const Step5Violation& r) const {
      return "step 5 condition (" + roman(r.condition) + ") failed at level " + std::to_string(r.level);
    }
    std::string operator()(const Step6Violation& r) const {
      return "step 6 condition (" + roman(r.condition) + ") failed for gamma_" + std::to_string(r.k) +
             " at level " + std::to_string(r.level);
    }
    std::string operator()(const ConflictingWeights& r) const {
      return rmt_in_gamma(r.rmt, r.k) + " gets weights " + std::to_string(r.first) + " and " +
             std::to_string(r.second) + " entering level " + std::to_string(r.level + 1);
    }
    std::string operator()(const NonzeroLeafWeight& r) const {
      return rmt_in_gamma(r.rmt, r.k) + " ends with weight " + std::to_string(r.weight);
    }
  };
  return std::visit(Visitor{}, reason);
}

Verdict decide_ncca(const RuleVector& rv, const DecideOptions& options) {
  const int n = static_cast<int>(rv.size());
  if (n < 5) throw InvalidInput("decide needs n >= 5 cells; use the brute-force oracle for smaller rings");

  Verdict verdict;
  SuperNode node = SuperNode::root();
  if (options.trace) verdict.trace.push_back(node);

  auto reject = [&verdict](Reason reason) {
    verdict.reason = reason;
    return verdict;
  };

  // Moves from `level` to level + 1, keeping only children allowed there.
  auto advance = [&](int level) -> std::optional<ConflictingWeights> {
    const RuleTable rule = rv[static_cast<std::size_t>(level)];
    SuperNode next;
    for (int k = 0; k < 4; ++k) {
      RmtSet keep = RmtSet::all();
      if (level + 1 == n - 2) keep = second_last_mask(k);
      if (level + 1 == n - 1) keep = last_mask(k);
      auto result = find_next_weight(rule, node[k], keep);
      if (auto* c = std::get_if<WeightConflict>(&result)) return ConflictingWeights{level, k, c->child, c->first, c->second};
      next[k] = std::get<WeightedSet>(result);
    }
    node = next;
    if (options.trace) verdict.trace.push_back(node);
    return std::nullopt;
  };

  if (!is_nc_rule(rv[0])) return reject(NonNcRule{0, rv[0]});
  if (auto c = advance(0)) return reject(*c);

  for (int i = 1; i <= n - 3; ++i) {
    const RuleTable rule = rv[static_cast<std::size_t>(i)];
    if (!is_nc_rule(rule)) return reject(NonNcRule{i, rule});
    if (auto id = check_step5(node, rule)) return reject(Step5Violation{i, *id});
    if (auto f = check_step6(node, rule)) return reject(Step6Violation{i, f->condition, f->k});
    if (auto c = advance(i)) return reject(*c);
  }
  // The last two levels arrive already cut down to what the boundary allows.
  for (int i = n - 2; i <= n - 1; ++i) {
    const RuleTable rule = rv[static_cast<std::size_t>(i)];
    if (auto f = check_step6(node, rule)) return reject(Step6Violation{i, f->condition, f->k});
    if (auto c = advance(i)) return reject(*c);
  }

  for (int k = 0; k < 4; ++k)
    for (Rmt r : node[k].rmts())
      if (node[k].weight(r) != 0) return reject(NonzeroLeafWeight{k, r, node[k].weight(r)});
  verdict.reason = Accepted{};
  return verdict;
}

}  // namespace ncca
