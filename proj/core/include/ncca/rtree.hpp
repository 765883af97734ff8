#pragma once

// Reachability tree of a finite non-uniform CA under periodic boundary.
//
// Level i holds the RMTs cell i may see; each node carries four weighted
// RMT sets, one per value of the boundary pair (s[n-1], s[0]). An edge of
// parity m from a level-i node carries the RMTs whose next state under
// rule i is m, and its child holds their successors. Levels n-2 and n-1
// are cut down to the RMTs compatible with the wrap-around. A root-to-leaf
// path of non-empty edges spells a reachable configuration (edge parities,
// cell 0 first).

#include <cstdint>
#include <optional>
#include <vector>

#include "ncca/automaton.hpp"
#include "ncca/weights.hpp"

namespace ncca {

struct TreeNode {
  /// Position j within the level; children of j are 2j and 2j+1.
  std::uint64_t index = 0;
  std::array<WeightedSet, 4> gamma;
  /// Set when the node is contained in another node of its level and was
  /// therefore not expanded.
  std::optional<std::uint64_t> covered_by;

  bool empty() const;
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct TreeEdge {
  std::uint64_t parent = 0;
  std::uint64_t child = 0;
  unsigned parity = 0;
  std::array<RmtSet, 4> label;
  /// False when the child would have no RMTs at all; such a child is not
  /// stored and the edge is drawn as non-reachable.
  bool reachable = false;
  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct WeightViolation {
  enum class Kind {
    /// Two parents in one node produced different weights for one child.
    WithinNode,
    /// The same (k, r) carries different weights in two nodes of a level.
    AcrossNodes,
  };
  Kind kind = Kind::WithinNode;
  int level = 0;
  std::uint64_t node = 0;
  /// For AcrossNodes: the earlier node holding the first weight.
  std::uint64_t other_node = 0;
  int k = 0;
  Rmt rmt;
  int first = 0;
  int second = 0;
  friend bool operator==(const WeightViolation&, const WeightViolation&) = default;
};

struct TreeLevel {
  /// Ascending index.
  std::vector<TreeNode> nodes;
  /// Edges leaving this level, ascending child index.
  std::vector<TreeEdge> edges;
  friend bool operator==(const TreeLevel&, const TreeLevel&) = default;
};

struct ReachabilityTree {
  int n = 0;
  bool pruned = false;
  /// n + 1 levels; level n holds the leaves.
  std::vector<TreeLevel> levels;
  std::vector<WeightViolation> violations;
  /// True when construction stopped at the first violation.
  bool truncated = false;

  std::size_t node_count() const;
  const TreeNode* find(int level, std::uint64_t index) const;
  friend bool operator==(const ReachabilityTree&, const ReachabilityTree&) = default;
};

struct TreeOptions {
  bool prune = false;
  bool stop_at_first_violation = false;
  int max_cells_unpruned = 16;
  int max_cells_pruned = 64;
  /// Guard against runaway growth when weights drift apart in a non-conserving CA.
  std::size_t max_nodes_per_level = 1u << 16;
};

/// Builds the tree level by level, weighting each node as it is created.
/// Throws InvalidInput for n < 3 and ResourceLimit past the depth or width guard.
ReachabilityTree build_tree(const RuleVector& rv, const TreeOptions& options = {});

/// Recomputes every node's weights from the root along the existing edges
/// and replaces tree.violations with what it finds. Returns the violations.
std::vector<WeightViolation> assign_weights(ReachabilityTree& tree, const RuleVector& rv);

struct TreeLeafWeight {
  std::uint64_t node = 0;
  int k = 0;
  Rmt rmt;
  int weight = 0;
};

struct TreeVerdict {
  std::optional<WeightViolation> violation;
  std::optional<TreeLeafWeight> leaf;

  bool accepted() const { return !violation && !leaf; }
};

/// Accepts iff no weight violation occurs and every leaf RMT has weight 0.
/// Requires n >= 4.
TreeVerdict tree_decide_ncca(const RuleVector& rv, bool prune = true);

/// Configurations (as Configuration::index()) spelled by the non-empty
/// leaves of an unpruned tree, ascending. Throws InvalidInput for a pruned tree.
std::vector<std::uint64_t> reachable_states(const ReachabilityTree& tree);

}  // namespace ncca
