#include "ncca/rtree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ncca/error.hpp"

namespace ncca {

bool TreeNode::empty() const {
  return std::all_of(gamma.begin(), gamma.end(), [](const WeightedSet& g) { return g.empty(); });
}

std::size_t ReachabilityTree::node_count() const {
  std::size_t c = 0;
  for (const auto& l : levels) c += l.nodes.size();
  return c;
}

const TreeNode* ReachabilityTree::find(int level, std::uint64_t index) const {
  if (level < 0 || level >= static_cast<int>(levels.size())) return nullptr;
  const auto& nodes = levels[static_cast<std::size_t>(level)].nodes;
  auto it = std::lower_bound(nodes.begin(), nodes.end(), index,
                             [](const TreeNode& node, std::uint64_t i) { return node.index < i; });
  return it != nodes.end() && it->index == index ? &*it : nullptr;
}

namespace {

RmtSet keep_mask(int n, int level, int k) {
  if (level == n - 2) return second_last_mask(k);
  if (level == n - 1) return last_mask(k);
  return RmtSet::all();
}

// Weighted successors of the RMTs in `label`, with within-node clashes
// reported through `violations` (the first weight is kept).
std::array<WeightedSet, 4> propagate(const TreeNode& parent, const std::array<RmtSet, 4>& label, RuleTable rule,
                                     int n, int child_level, std::uint64_t child_index,
                                     std::vector<WeightViolation>& violations) {
  std::array<WeightedSet, 4> out;
  for (int k = 0; k < 4; ++k) {
    const RmtSet keep = keep_mask(n, child_level, k);
    const WeightedSet& from = parent.gamma[static_cast<std::size_t>(k)];
    WeightedSet& to = out[static_cast<std::size_t>(k)];
    for (Rmt r : label[static_cast<std::size_t>(k)]) {
      const int w = next_weight(rule, r, from.weight(r));
      for (Rmt c : r.successors()) {
        if (!keep.contains(c)) continue;
        if (auto prev = to.find(c)) {
          if (*prev != w)
            violations.push_back({WeightViolation::Kind::WithinNode, child_level, child_index, child_index, k, c, *prev, w});
          continue;
        }
        to.set(c, w);
      }
    }
  }
  return out;
}

std::array<RmtSet, 4> split(const TreeNode& node, RuleTable rule, unsigned parity) {
  std::array<RmtSet, 4> label;
  for (std::size_t k = 0; k < 4; ++k)
    for (Rmt r : node.gamma[k].rmts())
      if (rule.lookup(r) == parity) label[k].insert(r);
  return label;
}

// Same (k, r) with two weights in two nodes of one level; one report per (k, r).
void check_across(const TreeLevel& level, int level_no, std::vector<WeightViolation>& violations) {
  struct Seen {
    int weight;
    std::uint64_t node;
    bool reported;
  };
  std::array<std::array<std::optional<Seen>, 8>, 4> seen{};
  for (const auto& node : level.nodes) {
    for (int k = 0; k < 4; ++k) {
      for (Rmt r : node.gamma[static_cast<std::size_t>(k)].rmts()) {
        const int w = node.gamma[static_cast<std::size_t>(k)].weight(r);
        auto& slot = seen[static_cast<std::size_t>(k)][r.value()];
        if (!slot) {
          slot = Seen{w, node.index, false};
        } else if (slot->weight != w && !slot->reported) {
          violations.push_back({WeightViolation::Kind::AcrossNodes, level_no, node.index, slot->node, k, r, slot->weight, w});
          slot->reported = true;
        }
      }
    }
  }
}

// Every member of a is in b with the same weight.
bool covered(const TreeNode& a, const TreeNode& b) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!a.gamma[k].rmts().is_subset_of(b.gamma[k].rmts())) return false;
    for (Rmt r : a.gamma[k].rmts())
      if (a.gamma[k].weight(r) != b.gamma[k].weight(r)) return false;
  }
  return true;
}

int total_size(const TreeNode& node) {
  int s = 0;
  for (const auto& g : node.gamma) s += g.rmts().size();
  return s;
}

// Marks sub-nodes. Larger nodes are visited first so every covered node
// points at a node that is itself expanded; among equal nodes the lowest
// index survives.
void prune_level(TreeLevel& level) {
  std::vector<std::size_t> order(level.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return total_size(level.nodes[a]) > total_size(level.nodes[b]);
  });
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    TreeNode& node = level.nodes[i];
    for (std::size_t q : kept) {
      if (covered(node, level.nodes[q])) {
        node.covered_by = level.nodes[q].index;
        break;
      }
    }
    if (!node.covered_by) kept.push_back(i);
  }
}

}  // namespace

ReachabilityTree build_tree(const RuleVector& rv, const TreeOptions& options) {
  const int n = static_cast<int>(rv.size());
  if (n < 3) throw InvalidInput("reachability trees need at least 3 cells");
  const int cap = options.prune ? options.max_cells_pruned : options.max_cells_unpruned;
  if (n > cap || n > 64)
    throw ResourceLimit((options.prune ? "pruned" : "unpruned") + std::string(" trees are capped at ") +
                        std::to_string(std::min(cap, 64)) + " cells; got " + std::to_string(n));

  ReachabilityTree tree;
  tree.n = n;
  tree.pruned = options.prune;
  tree.levels.resize(1);
  TreeNode root;
  for (int k = 0; k < 4; ++k) root.gamma[static_cast<std::size_t>(k)] = WeightedSet(sibling_pair(k), 0);
  tree.levels[0].nodes.push_back(root);

  for (int i = 0; i < n; ++i) {
    TreeLevel& level = tree.levels[static_cast<std::size_t>(i)];
    if (options.prune) prune_level(level);
    const RuleTable rule = rv[static_cast<std::size_t>(i)];
    TreeLevel next;
    for (const TreeNode& parent : level.nodes) {
      if (parent.covered_by) continue;
      for (unsigned parity = 0; parity < 2; ++parity) {
        TreeEdge edge;
        edge.parent = parent.index;
        edge.child = 2 * parent.index + parity;
        edge.parity = parity;
        edge.label = split(parent, rule, parity);
        TreeNode child;
        child.index = edge.child;
        child.gamma = propagate(parent, edge.label, rule, n, i + 1, child.index, tree.violations);
        edge.reachable = !child.empty();
        if (edge.reachable) next.nodes.push_back(child);
        level.edges.push_back(edge);
      }
    }
    if (next.nodes.size() > options.max_nodes_per_level)
      throw ResourceLimit("reachability tree level " + std::to_string(i + 1) + " exceeds " +
                          std::to_string(options.max_nodes_per_level) + " nodes");
    check_across(next, i + 1, tree.violations);
    tree.levels.push_back(std::move(next));
    if (options.stop_at_first_violation && !tree.violations.empty()) {
      tree.truncated = i + 1 < n;
      break;
    }
  }
  return tree;
}

std::vector<WeightViolation> assign_weights(ReachabilityTree& tree, const RuleVector& rv) {
  if (static_cast<int>(rv.size()) != tree.n) throw InvalidInput("rule vector does not match the tree");
  std::vector<WeightViolation> violations;
  if (tree.levels.empty()) return violations;
  for (auto& root : tree.levels[0].nodes)
    for (auto& g : root.gamma) g = WeightedSet(g.rmts(), 0);

  for (std::size_t i = 0; i + 1 < tree.levels.size(); ++i) {
    TreeLevel& level = tree.levels[i];
    TreeLevel& next = tree.levels[i + 1];
    const RuleTable rule = rv[i];
    for (const TreeEdge& edge : level.edges) {
      if (!edge.reachable) continue;
      const TreeNode* parent = tree.find(static_cast<int>(i), edge.parent);
      auto it = std::lower_bound(next.nodes.begin(), next.nodes.end(), edge.child,
                                 [](const TreeNode& node, std::uint64_t c) { return node.index < c; });
      if (!parent || it == next.nodes.end() || it->index != edge.child)
        throw InvalidInput("tree edge refers to a missing node");
      it->gamma = propagate(*parent, edge.label, rule, tree.n, static_cast<int>(i) + 1, edge.child, violations);
    }
    check_across(next, static_cast<int>(i) + 1, violations);
  }
  tree.violations = violations;
  return violations;
}

TreeVerdict tree_decide_ncca(const RuleVector& rv, bool prune) {
  if (rv.size() < 4) throw InvalidInput("the tree procedure needs n >= 4 cells");
  TreeOptions options;
  options.prune = prune;
  options.stop_at_first_violation = true;
  const ReachabilityTree tree = build_tree(rv, options);
  TreeVerdict verdict;
  if (!tree.violations.empty()) {
    verdict.violation = tree.violations.front();
    return verdict;
  }
  for (const TreeNode& leaf : tree.levels.back().nodes)
    for (int k = 0; k < 4; ++k)
      for (Rmt r : leaf.gamma[static_cast<std::size_t>(k)].rmts())
        if (const int w = leaf.gamma[static_cast<std::size_t>(k)].weight(r); w != 0) {
          verdict.leaf = TreeLeafWeight{leaf.index, k, r, w};
          return verdict;
        }
  return verdict;
}

std::vector<std::uint64_t> reachable_states(const ReachabilityTree& tree) {
  if (tree.pruned) throw InvalidInput("reachable states can only be read from an unpruned tree");
  if (static_cast<int>(tree.levels.size()) != tree.n + 1) throw InvalidInput("tree is incomplete");
  std::vector<std::uint64_t> out;
  for (const TreeNode& leaf : tree.levels.back().nodes) out.push_back(leaf.index);
  return out;
}

}  // namespace ncca
