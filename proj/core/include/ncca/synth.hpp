#pragma once

// Seeded synthesis of number-conserving rule vectors.
//
// Cell 0 gets a uniformly drawn number-conserving rule. Every later rule is
// assembled bit by bit from the weights of the current super node; where
// the weights leave a pair of bits free, one bit is drawn from the choice
// source and both bits of the pair take it. Cells 1, n-2 and n-1 use their
// own selection tables because not all RMTs are present at those levels.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ncca/automaton.hpp"
#include "ncca/weights.hpp"

namespace ncca {

/// One consumed free choice.
struct Choice {
  int cell = 0;
  /// Site label, e.g. "r1.2", "ri.1_5", "rn2.2_6", or "r0" for the rule draw.
  std::string site;
  /// A bit for alpha sites; the Wolfram number for "r0".
  int value = 0;
  friend bool operator==(const Choice&, const Choice&) = default;
};

struct CellRecord {
  int cell = 0;
  RuleTable rule;
  std::vector<Choice> choices;
  /// Labels of the weight conditions that fixed bits of this rule.
  std::vector<std::string> fired;
  friend bool operator==(const CellRecord&, const CellRecord&) = default;
};

struct SynthesisTrace {
  std::uint64_t seed = 0;
  int n = 0;
  std::vector<CellRecord> cells;

  /// All choices in consumption order.
  std::vector<Choice> choices() const;
  RuleVector rules() const;
  friend bool operator==(const SynthesisTrace&, const SynthesisTrace&) = default;
};

/// Where free choices come from.
class ChoiceSource {
 public:
  virtual ~ChoiceSource() = default;
  /// One of the nine number-conserving rules.
  virtual RuleTable first_rule() = 0;
  /// 0 or 1.
  virtual int bit(const std::string& site) = 0;
};

/// Draws from std::mt19937_64. The mapping from engine output to choices
/// is fixed here so results do not depend on the standard library's
/// distribution implementations.
class SeededChoices final : public ChoiceSource {
 public:
  explicit SeededChoices(std::uint64_t seed) : engine_(seed) {}
  RuleTable first_rule() override;
  int bit(const std::string& site) override;

 private:
  std::mt19937_64 engine_;
};

/// Replays an explicit list. Throws InvalidInput when the list runs out
/// or the first rule is not number-conserving.
class ReplayChoices final : public ChoiceSource {
 public:
  ReplayChoices(RuleTable first, std::vector<int> bits);
  /// Replays the choices recorded in a trace.
  explicit ReplayChoices(const SynthesisTrace& trace);
  RuleTable first_rule() override;
  int bit(const std::string& site) override;
  /// Bits not consumed.
  std::size_t remaining() const { return bits_.size() - next_; }

 private:
  RuleTable first_;
  std::vector<int> bits_;
  std::size_t next_ = 0;
};

struct SynthesisResult {
  RuleVector rules;
  SynthesisTrace trace;
};

/// Throws InvalidInput for n < 5. The result is checked with decide_ncca
/// before returning; a rejection raises std::logic_error.
SynthesisResult synthesize(int n, std::uint64_t seed);
SynthesisResult synthesize(int n, ChoiceSource& choices, std::uint64_t seed_label = 0);

/// Rule for cell 1 from the level-1 super node.
RuleTable select_r1(const SuperNode& node, ChoiceSource& choices, CellRecord* record = nullptr);
/// Rule for a cell 2 <= i <= n-3 from its level-i super node.
RuleTable select_generic(const SuperNode& node, ChoiceSource& choices, CellRecord* record = nullptr);
/// Rule for cell n-2 from the restricted level-(n-2) super node.
RuleTable select_rn2(const SuperNode& node, ChoiceSource& choices, CellRecord* record = nullptr);
/// Rule for cell n-1 from the restricted level-(n-1) super node. No free choices.
RuleTable select_rn1(const SuperNode& node, CellRecord* record = nullptr);

}  // namespace ncca
