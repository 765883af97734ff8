#pragma once

// Exhaustive ground truth for small rings: every one of the 2^n
// configurations is stepped once and its population compared.

#include <cstdint>
#include <optional>
#include <vector>

#include "ncca/automaton.hpp"

namespace ncca {

struct OracleLimits {
  /// Largest ring the oracle will enumerate.
  int max_cells = 24;
};

/// True iff every configuration keeps its number of 1s. Requires
/// 3 <= n <= limits.max_cells; throws InvalidInput / ResourceLimit.
bool brute_force_is_ncca(const RuleVector& rv, const OracleLimits& limits = {});

/// Successor function over all 2^n states. States are indexed as in
/// Configuration::index() (cell 0 = most significant bit).
struct StateTransitionGraph {
  int n = 0;
  std::vector<std::uint32_t> successor;
  std::vector<std::uint32_t> predecessor_count;

  std::size_t size() const { return successor.size(); }
  bool reachable(std::uint32_t state) const { return predecessor_count[state] > 0; }
  /// Ascending.
  std::vector<std::uint32_t> non_reachable() const;
  std::vector<std::uint32_t> reachable_states() const;
};

StateTransitionGraph build_stg(const RuleVector& rv, const OracleLimits& limits = {});

/// Number of rule vectors over an alphabet that conserve the number of 1s.
struct Census {
  int n = 0;
  std::vector<RuleTable> alphabet;
  std::uint64_t count = 0;
  /// Present only when count <= CensusOptions::max_listed.
  std::optional<std::vector<RuleVector>> accepted_vectors;

  friend bool operator==(const Census&, const Census&) = default;
};

struct CensusOptions {
  /// Empty means the nine number-conserving rules.
  std::vector<RuleTable> alphabet;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned jobs = 0;
  /// Cap on |alphabet|^n * 2^n * n.
  double work_budget = 5e9;
  std::uint64_t max_listed = 10000;
};

/// Exhaustive census. Vectors are enumerated in lexicographic order of
/// alphabet position, so accepted_vectors is deterministic regardless of
/// the number of jobs. Throws InvalidInput for n < 3, ResourceLimit when
/// the work estimate exceeds the budget.
Census count_ncca_vectors(int n, const CensusOptions& options = {});

}  // namespace ncca
