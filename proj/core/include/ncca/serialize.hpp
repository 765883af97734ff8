#pragma once

// JSON and Graphviz DOT forms of the library's results. JSON documents
// parse back into equal values; DOT output lists nodes in ascending order
// so it is byte-stable.

#include <string>
#include <string_view>
#include <vector>

#include "ncca/decide.hpp"
#include "ncca/oracle.hpp"
#include "ncca/rtree.hpp"
#include "ncca/synth.hpp"

namespace ncca {

/// Parse failures throw InvalidInput.

std::string census_to_json(const Census& census);
Census census_from_json(std::string_view text);

std::string synthesis_trace_to_json(const SynthesisTrace& trace);
SynthesisTrace synthesis_trace_from_json(std::string_view text);

/// Per-level super nodes, level 0 first.
std::string super_nodes_to_json(const std::vector<SuperNode>& levels);
std::vector<SuperNode> super_nodes_from_json(std::string_view text);

std::string verdict_to_json(const Verdict& verdict);
Verdict verdict_from_json(std::string_view text);

std::string tree_to_json(const ReachabilityTree& tree);
ReachabilityTree tree_from_json(std::string_view text);

/// Nodes "N<i>.<j>" labelled with every non-empty gamma as "Γk: {r(w), ...}";
/// non-reachable edges are dashed and end in a point node.
std::string tree_to_dot(const ReachabilityTree& tree);

/// One node per state (label = bit string, cell 0 first), one edge per state.
std::string stg_to_dot(const StateTransitionGraph& stg);
std::string stg_to_json(const StateTransitionGraph& stg);

}  // namespace ncca
