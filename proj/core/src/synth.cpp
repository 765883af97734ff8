#include "ncca/synth.hpp"

#include <stdexcept>

#include "ncca/decide.hpp"
#include "ncca/error.hpp"

namespace ncca {

std::vector<Choice> SynthesisTrace::choices() const {
  std::vector<Choice> out;
  for (const auto& cell : cells) out.insert(out.end(), cell.choices.begin(), cell.choices.end());
  return out;
}

RuleVector SynthesisTrace::rules() const {
  std::vector<RuleTable> out;
  for (const auto& cell : cells) out.push_back(cell.rule);
  return RuleVector(std::move(out));
}

RuleTable SeededChoices::first_rule() {
  // High 64 bits of x * 9, i.e. floor(x * 9 / 2^64).
  const std::uint64_t x = engine_();
  const std::uint64_t m = kNumberConservingRules.size();
  const std::uint64_t high = ((x >> 32) * m + (((x & 0xFFFFFFFFu) * m) >> 32)) >> 32;
  return RuleTable(kNumberConservingRules[static_cast<std::size_t>(high)]);
}

int SeededChoices::bit(const std::string&) { return static_cast<int>(engine_() >> 63); }

ReplayChoices::ReplayChoices(RuleTable first, std::vector<int> bits) : first_(first), bits_(std::move(bits)) {
  if (!is_nc_rule(first_))
    throw InvalidInput("replay must start with a number-conserving rule, got " + std::to_string(first_.wolfram()));
  for (int b : bits_)
    if (b != 0 && b != 1) throw InvalidInput("replayed choices must be 0 or 1");
}

namespace {

RuleTable first_of(const SynthesisTrace& trace) {
  for (const auto& c : trace.choices())
    if (c.site == "r0") return RuleTable::from_number(c.value);
  throw InvalidInput("trace has no first-rule choice");
}

std::vector<int> bits_of(const SynthesisTrace& trace) {
  std::vector<int> out;
  for (const auto& c : trace.choices())
    if (c.site != "r0") out.push_back(c.value);
  return out;
}

}  // namespace

ReplayChoices::ReplayChoices(const SynthesisTrace& trace) : ReplayChoices(first_of(trace), bits_of(trace)) {}

RuleTable ReplayChoices::first_rule() { return first_; }

int ReplayChoices::bit(const std::string& site) {
  if (next_ >= bits_.size()) throw InvalidInput("replay ran out of choices at site " + site);
  return bits_[next_++];
}

namespace {

// Collects the eight bits of a rule under construction and logs what set them.
class Builder {
 public:
  Builder(ChoiceSource& choices, CellRecord* record) : choices_(choices), record_(record) {
    bits_[0] = 0;
    bits_[7] = 1;
  }

  void set(unsigned r, unsigned b) { bits_[r] = b; }
  void set(unsigned r, unsigned s, unsigned b) { bits_[r] = bits_[s] = b; }
  unsigned get(unsigned r) const { return bits_[r]; }

  unsigned alpha(const std::string& site) {
    const int b = choices_.bit(site);
    if (record_) record_->choices.push_back({record_->cell, site, b});
    return static_cast<unsigned>(b);
  }
  void fired(const std::string& label) {
    if (record_) record_->fired.push_back(label);
  }

  RuleTable finish() {
    const RuleTable rule = rule_from_bits(bits_);
    if (record_) record_->rule = rule;
    if (!is_nc_rule(rule))
      throw std::logic_error("selection produced a non-conserving rule " + std::to_string(rule.wolfram()));
    return rule;
  }

 private:
  ChoiceSource& choices_;
  CellRecord* record_;
  std::array<unsigned, 8> bits_{};
};

// Weight of r in gamma_k, or nothing when r is absent.
std::optional<int> w(const SuperNode& node, int k, unsigned r) { return node[k].find(Rmt::unchecked(r)); }
bool is(const SuperNode& node, int k, unsigned r, int value) { return node[k].has(r, value); }

std::string label(int k, unsigned r, int value) {
  return "W" + std::to_string(k) + "[" + std::to_string(r) + "]=" + std::to_string(value);
}

}  // namespace

RuleTable select_r1(const SuperNode& node, ChoiceSource& choices, CellRecord* record) {
  Builder b(choices, record);
  const bool w14_eq_w16 = w(node, 1, 4) == w(node, 1, 6);
  if (w14_eq_w16) b.fired("W1[4]=W1[6]");
  if (is(node, 0, 2, -1)) {
    b.fired(label(0, 2, -1));
    b.set(2, 0);
    if (w14_eq_w16) {
      b.set(3, 4, 0);
      b.set(6, 1);
      b.set(1, 5, b.alpha("r1.1_5"));
    } else {
      b.set(5, 1);
      const unsigned a = b.alpha("r1.4_6");
      b.set(4, 6, a);
      b.set(1, 3, a == 0 ? 1 : 0);
    }
    return b.finish();
  }

  b.set(2, b.alpha("r1.2"));
  if (b.get(2) == 0) {
    if (w14_eq_w16) {
      if (is(node, 1, 4, 0) || is(node, 2, 3, 0)) {
        b.fired(is(node, 1, 4, 0) ? label(1, 4, 0) : label(2, 3, 0));
        b.set(3, 1);
        b.set(4, 6, 0);
      } else {
        const unsigned a = b.alpha("r1.4_6");
        b.set(4, 6, a);
        b.set(3, a == 0 ? 1 : 0);
      }
      if (b.get(4) == 0) {
        b.set(1, 5, b.alpha("r1.1_5"));
      } else {
        b.set(1, 0);
        b.set(5, 1);
      }
    } else {
      b.set(5, 4, 1);
      b.set(6, 1, 0);
      b.set(3, 1);
    }
  } else {
    b.set(3, 6, 1);
    if (w14_eq_w16) {
      b.set(4, 0);
      b.set(1, 5, b.alpha("r1.1_5"));
    } else {
      b.set(5, 4, 1);
      b.set(1, 0);
    }
  }
  return b.finish();
}

RuleTable select_generic(const SuperNode& node, ChoiceSource& choices, CellRecord* record) {
  Builder b(choices, record);
  // All eight RMTs are present in every gamma at these levels, so gamma_0
  // alone decides RMTs 4 and 3.
  const WeightedSet& g0 = node[0];
  auto w0 = [&g0](unsigned r) { return g0.weight(Rmt::unchecked(r)); };

  if (w0(4) == w0(0)) {
    b.fired("W0[4]=W0[0]");
    b.set(4, 0);
  } else {
    b.fired("W0[4]>W0[0]");
    b.set(4, 1);
  }
  if (b.get(4) == 1) {
    b.set(1, 0);
    b.set(5, 1);
  } else if (is(node, 0, 5, 1) || is(node, 1, 5, 2) || is(node, 2, 5, 1) || is(node, 3, 5, 1) || is(node, 3, 1, 1)) {
    b.fired("1_5<-1");
    b.set(1, 5, 1);
  } else if (is(node, 3, 1, -1)) {
    b.fired(label(3, 1, -1));
    b.set(1, 5, 0);
  } else {
    b.set(1, 5, b.alpha("ri.1_5"));
  }

  if (w0(3) == w0(7)) {
    b.fired("W0[3]=W0[7]");
    b.set(3, 1);
  } else {
    b.fired("W0[3]<W0[7]");
    b.set(3, 0);
  }
  if (b.get(3) == 0) {
    b.set(2, 0);
    b.set(6, 1);
  } else if (is(node, 0, 2, -1) || is(node, 1, 2, -1) || is(node, 2, 2, -2) || is(node, 3, 2, -1) ||
             is(node, 0, 6, -1)) {
    b.fired("2_6<-0");
    b.set(2, 6, 0);
  } else if (is(node, 0, 6, 1)) {
    b.fired(label(0, 6, 1));
    b.set(2, 6, 1);
  } else {
    b.set(2, 6, b.alpha("ri.2_6"));
  }
  return b.finish();
}

RuleTable select_rn2(const SuperNode& node, ChoiceSource& choices, CellRecord* record) {
  Builder b(choices, record);
  const bool c5 = is(node, 0, 2, -1) && is(node, 0, 6, -1);
  const bool c6 = is(node, 1, 2, 1) && is(node, 1, 6, 1);
  const bool c7 = is(node, 2, 1, -1) && is(node, 2, 5, -1);
  const bool c8 = is(node, 3, 1, 1) && is(node, 3, 5, 1);
  if (c5) b.fired("c5");
  if (c6) b.fired("c6");
  if (c7) b.fired("c7");
  if (c8) b.fired("c8");

  b.set(4, w(node, 0, 4) == w(node, 0, 0) ? 0 : 1);
  if (b.get(4) == 1) {
    b.set(1, 0);
    b.set(5, 1);
  } else if (c7) {
    b.set(1, 5, 0);
  } else if (c8) {
    b.set(1, 5, 1);
  } else {
    b.set(1, 5, b.alpha("rn2.1_5"));
  }

  b.set(3, w(node, 3, 3) == w(node, 3, 7) ? 1 : 0);
  if (b.get(3) == 0) {
    b.set(2, 0);
    b.set(6, 1);
  } else if (c5) {
    b.set(2, 6, 0);
  } else if (c6) {
    b.set(2, 6, 1);
  } else {
    b.set(2, 6, b.alpha("rn2.2_6"));
  }
  return b.finish();
}

RuleTable select_rn1(const SuperNode& node, CellRecord* record) {
  // No alpha sites here; the source is never consulted.
  ReplayChoices none(RuleTable(204), {});
  Builder b(none, record);
  // An absent RMT is treated like weight 0.
  auto zero = [&node](int k, unsigned r) { return w(node, k, r).value_or(0) == 0; };
  b.set(4, zero(0, 4) ? 0 : 1);
  b.set(3, zero(3, 3) ? 1 : 0);
  for (unsigned r : {1u, 5u}) b.set(r, zero(1, r) ? 0 : 1);
  for (unsigned r : {2u, 6u}) b.set(r, zero(2, r) ? 1 : 0);
  return b.finish();
}

namespace {

SuperNode advance(const SuperNode& node, RuleTable rule, int next_level, int n) {
  SuperNode next;
  for (int k = 0; k < 4; ++k) {
    RmtSet keep = RmtSet::all();
    if (next_level == n - 2) keep = second_last_mask(k);
    if (next_level == n - 1) keep = last_mask(k);
    auto result = find_next_weight(rule, node[k], keep);
    if (std::holds_alternative<WeightConflict>(result))
      throw std::logic_error("weight conflict while synthesizing level " + std::to_string(next_level));
    next[k] = std::get<WeightedSet>(result);
  }
  return next;
}

}  // namespace

SynthesisResult synthesize(int n, ChoiceSource& choices, std::uint64_t seed_label) {
  if (n < 5) throw InvalidInput("synthesis needs n >= 5 cells");
  SynthesisResult result;
  result.trace.seed = seed_label;
  result.trace.n = n;
  auto& cells = result.trace.cells;
  cells.reserve(static_cast<std::size_t>(n));

  SuperNode node = SuperNode::root();
  for (int i = 0; i < n; ++i) {
    CellRecord rec;
    rec.cell = i;
    RuleTable rule;
    if (i == 0) {
      rule = choices.first_rule();
      if (!is_nc_rule(rule)) throw InvalidInput("first rule must be number conserving");
      rec.rule = rule;
      rec.choices.push_back({0, "r0", rule.wolfram()});
    } else if (i == 1) {
      rule = select_r1(node, choices, &rec);
    } else if (i <= n - 3) {
      rule = select_generic(node, choices, &rec);
    } else if (i == n - 2) {
      rule = select_rn2(node, choices, &rec);
    } else {
      rule = select_rn1(node, &rec);
    }
    cells.push_back(std::move(rec));
    if (i + 1 < n) node = advance(node, rule, i + 1, n);
  }

  result.rules = result.trace.rules();
  const Verdict verdict = decide_ncca(result.rules);
  if (!verdict.accepted())
    throw std::logic_error("synthesized vector " + result.rules.to_string() + " rejected: " + verdict.describe());
  return result;
}

SynthesisResult synthesize(int n, std::uint64_t seed) {
  SeededChoices choices(seed);
  return synthesize(n, choices, seed);
}

}  // namespace ncca
