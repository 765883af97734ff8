#pragma once

// Linear-time decision of number conservation for n >= 5 cells.
//
// The procedure walks one super node per cell. At levels 1..n-3 it checks
// that the rule is one of the nine number-conserving rules and that the
// weight/next-state implications hold (the sixteen per-set conditions and
// the six cross-RMT conditions). At levels n-2 and n-1 the RMT sets are
// first cut down to what the periodic boundary allows and only the six
// cross-RMT conditions are checked. After the last cell every remaining
// weight must be zero.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncca/automaton.hpp"
#include "ncca/weights.hpp"

namespace ncca {

struct Accepted {
  friend bool operator==(const Accepted&, const Accepted&) = default;
};
/// Cell `cell` uses a rule outside the nine number-conserving rules.
struct NonNcRule {
  int cell = 0;
  RuleTable rule;
  friend bool operator==(const NonNcRule&, const NonNcRule&) = default;
};
/// One of the sixteen per-set implications (1..16) failed at `level`.
struct Step5Violation {
  int level = 0;
  int condition = 0;
  friend bool operator==(const Step5Violation&, const Step5Violation&) = default;
};
/// One of the six cross-RMT implications (1..6) failed for gamma_k at `level`.
struct Step6Violation {
  int level = 0;
  int condition = 0;
  int k = 0;
  friend bool operator==(const Step6Violation&, const Step6Violation&) = default;
};
/// Two equivalent RMTs sent different weights to the same successor while
/// moving from `level` to `level + 1`.
struct ConflictingWeights {
  int level = 0;
  int k = 0;
  Rmt rmt;
  int first = 0;
  int second = 0;
  friend bool operator==(const ConflictingWeights&, const ConflictingWeights&) = default;
};
/// An RMT of the final super node kept a non-zero weight.
struct NonzeroLeafWeight {
  int k = 0;
  Rmt rmt;
  int weight = 0;
  friend bool operator==(const NonzeroLeafWeight&, const NonzeroLeafWeight&) = default;
};

using Reason =
    std::variant<Accepted, NonNcRule, Step5Violation, Step6Violation, ConflictingWeights, NonzeroLeafWeight>;

struct Verdict {
  Reason reason;
  /// Super node of every level reached, level 0 first; levels n-2 and n-1
  /// are stored after restriction. Filled only on request.
  std::vector<SuperNode> trace;

  bool accepted() const { return std::holds_alternative<Accepted>(reason); }
  /// One-line human-readable reason, e.g. "step 5 condition (x) failed at level 3".
  std::string describe() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct DecideOptions {
  bool trace = false;
};

/// Throws InvalidInput for n < 5 (use brute_force_is_ncca for small rings).
Verdict decide_ncca(const RuleVector& rv, const DecideOptions& options = {});

/// The sixteen implications "W_k[r] = w  =>  rule[r] = b". Conditions whose
/// RMT is absent from gamma_k hold vacuously. Returns the first failed id.
std::optional<int> check_step5(const SuperNode& node, RuleTable rule);

struct Step6Failure {
  int condition = 0;
  int k = 0;
  friend bool operator==(const Step6Failure&, const Step6Failure&) = default;
};
/// The six implications between W_k[4]/W_k[0], W_k[5]/W_k[1], W_k[3]/W_k[7]
/// and W_k[2]/W_k[6], evaluated for each k where both RMTs are present.
/// Scans k = 0..3 and, inside each k, conditions 1..6.
std::optional<Step6Failure> check_step6(const SuperNode& node, RuleTable rule);

/// "i".."xvi".
std::string roman(int value);

}  // namespace ncca
