#include "ncca/serialize.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "ncca/error.hpp"

namespace ncca {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

// Wraps field access so type errors surface as InvalidInput.
template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("unexpected JSON shape: ") + e.what());
  }
}

json weighted_set_json(const WeightedSet& g) {
  json out = json::object();
  for (Rmt r : g.rmts()) out[std::to_string(r.value())] = g.weight(r);
  return out;
}

WeightedSet weighted_set_from(const json& j) {
  WeightedSet g;
  for (const auto& [key, value] : j.items()) g.set(Rmt(static_cast<unsigned>(std::stoul(key))), value.get<int>());
  return g;
}

json gamma_json(const std::array<WeightedSet, 4>& gamma) {
  json out = json::array();
  for (const auto& g : gamma) out.push_back(weighted_set_json(g));
  return out;
}

std::array<WeightedSet, 4> gamma_from(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidInput("gamma must be an array of four sets");
  std::array<WeightedSet, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = weighted_set_from(j[k]);
  return out;
}

json rules_json(const RuleVector& rv) {
  json out = json::array();
  for (auto r : rv.rules()) out.push_back(r.wolfram());
  return out;
}

RuleVector rules_from(const json& j) {
  std::vector<RuleTable> rules;
  for (const auto& v : j) rules.push_back(RuleTable::from_number(v.get<long long>()));
  return RuleVector(std::move(rules));
}

json choice_json(const Choice& c) { return {{"cell", c.cell}, {"site", c.site}, {"value", c.value}}; }

Choice choice_from(const json& j) {
  return Choice{j.at("cell").get<int>(), j.at("site").get<std::string>(), j.at("value").get<int>()};
}

json reason_json(const Reason& reason) {
  struct Visitor {
    json operator()(const Accepted&) const { return {{"kind", "accepted"}}; }
    json operator()(const NonNcRule& r) const {
      return {{"kind", "non_nc_rule"}, {"cell", r.cell}, {"rule", r.rule.wolfram()}};
    }
    json operator()(const Step5Violation& r) const {
      return {{"kind", "step5"}, {"level", r.level}, {"condition", r.condition}};
    }
    json operator()(const Step6Violation& r) const {
      return {{"kind", "step6"}, {"level", r.level}, {"condition", r.condition}, {"k", r.k}};
    }
    json operator()(const ConflictingWeights& r) const {
      return {{"kind", "conflicting_weights"}, {"level", r.level}, {"k", r.k},
              {"rmt", r.rmt.value()},          {"first", r.first}, {"second", r.second}};
    }
    json operator()(const NonzeroLeafWeight& r) const {
      return {{"kind", "nonzero_leaf_weight"}, {"k", r.k}, {"rmt", r.rmt.value()}, {"weight", r.weight}};
    }
  };
  return std::visit(Visitor{}, reason);
}

Reason reason_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  auto i = [&j](const char* key) { return j.at(key).get<int>(); };
  auto rmt = [&j]() { return Rmt(j.at("rmt").get<unsigned>()); };
  if (kind == "accepted") return Accepted{};
  if (kind == "non_nc_rule") return NonNcRule{i("cell"), RuleTable::from_number(i("rule"))};
  if (kind == "step5") return Step5Violation{i("level"), i("condition")};
  if (kind == "step6") return Step6Violation{i("level"), i("condition"), i("k")};
  if (kind == "conflicting_weights") return ConflictingWeights{i("level"), i("k"), rmt(), i("first"), i("second")};
  if (kind == "nonzero_leaf_weight") return NonzeroLeafWeight{i("k"), rmt(), i("weight")};
  throw InvalidInput("unknown verdict kind '" + kind + "'");
}

json super_nodes_json(const std::vector<SuperNode>& levels) {
  json out = json::array();
  for (std::size_t i = 0; i < levels.size(); ++i)
    out.push_back({{"level", i}, {"gamma", gamma_json(levels[i].gamma)}});
  return out;
}

std::vector<SuperNode> super_nodes_from(const json& j) {
  std::vector<SuperNode> out;
  for (const auto& level : j) {
    SuperNode node;
    node.gamma = gamma_from(level.at("gamma"));
    out.push_back(node);
  }
  return out;
}

json violation_json(const WeightViolation& v) {
  return {{"kind", v.kind == WeightViolation::Kind::WithinNode ? "within_node" : "across_nodes"},
          {"level", v.level},
          {"node", v.node},
          {"other_node", v.other_node},
          {"k", v.k},
          {"rmt", v.rmt.value()},
          {"first", v.first},
          {"second", v.second}};
}

WeightViolation violation_from(const json& j) {
  WeightViolation v;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "within_node") {
    v.kind = WeightViolation::Kind::WithinNode;
  } else if (kind == "across_nodes") {
    v.kind = WeightViolation::Kind::AcrossNodes;
  } else {
    throw InvalidInput("unknown violation kind '" + kind + "'");
  }
  v.level = j.at("level").get<int>();
  v.node = j.at("node").get<std::uint64_t>();
  v.other_node = j.at("other_node").get<std::uint64_t>();
  v.k = j.at("k").get<int>();
  v.rmt = Rmt(j.at("rmt").get<unsigned>());
  v.first = j.at("first").get<int>();
  v.second = j.at("second").get<int>();
  return v;
}

json label_json(const std::array<RmtSet, 4>& label) {
  json out = json::array();
  for (const auto& s : label) {
    json members = json::array();
    for (Rmt r : s) members.push_back(r.value());
    out.push_back(members);
  }
  return out;
}

std::array<RmtSet, 4> label_from(const json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidInput("edge label must be an array of four sets");
  std::array<RmtSet, 4> out;
  for (std::size_t k = 0; k < 4; ++k)
    for (const auto& r : j[k]) out[k].insert(Rmt(r.get<unsigned>()));
  return out;
}

std::string node_id(int level, std::uint64_t index) {
  return "N" + std::to_string(level) + "." + std::to_string(index);
}

std::string node_label(int level, const TreeNode& node) {
  std::string out = node_id(level, node.index);
  for (int k = 0; k < 4; ++k) {
    const WeightedSet& g = node.gamma[static_cast<std::size_t>(k)];
    if (g.empty()) continue;
    out += "\\nΓ" + std::to_string(k) + ": {";
    bool first = true;
    for (Rmt r : g.rmts()) {
      if (!first) out += ",";
      out += std::to_string(r.value()) + "(" + std::to_string(g.weight(r)) + ")";
      first = false;
    }
    out += "}";
  }
  if (node.covered_by) out += "\\nsub-node of " + node_id(level, *node.covered_by);
  return out;
}

std::string bit_string(std::uint32_t state, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = static_cast<char>('0' + ((state >> (n - 1 - i)) & 1u));
  return out;
}

}  // namespace

std::string census_to_json(const Census& census) {
  json j;
  j["n"] = census.n;
  json alphabet = json::array();
  for (auto r : census.alphabet) alphabet.push_back(r.wolfram());
  j["alphabet"] = alphabet;
  j["count"] = census.count;
  if (census.accepted_vectors) {
    json vectors = json::array();
    for (const auto& rv : *census.accepted_vectors) vectors.push_back(rules_json(rv));
    j["accepted_vectors"] = vectors;
  }
  return j.dump(2);
}

Census census_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&j] {
    Census c;
    c.n = j.at("n").get<int>();
    for (const auto& r : j.at("alphabet")) c.alphabet.push_back(RuleTable::from_number(r.get<long long>()));
    c.count = j.at("count").get<std::uint64_t>();
    if (j.contains("accepted_vectors")) {
      std::vector<RuleVector> vectors;
      for (const auto& v : j.at("accepted_vectors")) vectors.push_back(rules_from(v));
      c.accepted_vectors = std::move(vectors);
    }
    return c;
  });
}

std::string synthesis_trace_to_json(const SynthesisTrace& trace) {
  json j;
  j["seed"] = trace.seed;
  j["n"] = trace.n;
  j["rules"] = rules_json(trace.rules());
  json choices = json::array();
  for (const auto& c : trace.choices()) choices.push_back(choice_json(c));
  j["choices"] = choices;
  json cells = json::array();
  for (const auto& cell : trace.cells) {
    json cj;
    cj["cell"] = cell.cell;
    cj["rule"] = cell.rule.wolfram();
    json cc = json::array();
    for (const auto& c : cell.choices) cc.push_back(choice_json(c));
    cj["choices"] = cc;
    cj["fired"] = cell.fired;
    cells.push_back(cj);
  }
  j["cells"] = cells;
  return j.dump(2);
}

SynthesisTrace synthesis_trace_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&j] {
    SynthesisTrace t;
    t.seed = j.at("seed").get<std::uint64_t>();
    t.n = j.at("n").get<int>();
    for (const auto& cj : j.at("cells")) {
      CellRecord cell;
      cell.cell = cj.at("cell").get<int>();
      cell.rule = RuleTable::from_number(cj.at("rule").get<long long>());
      for (const auto& c : cj.at("choices")) cell.choices.push_back(choice_from(c));
      cell.fired = cj.at("fired").get<std::vector<std::string>>();
      t.cells.push_back(std::move(cell));
    }
    return t;
  });
}

std::string super_nodes_to_json(const std::vector<SuperNode>& levels) { return super_nodes_json(levels).dump(2); }

std::vector<SuperNode> super_nodes_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&j] { return super_nodes_from(j); });
}

std::string verdict_to_json(const Verdict& verdict) {
  json j;
  j["accepted"] = verdict.accepted();
  j["reason"] = reason_json(verdict.reason);
  j["message"] = verdict.describe();
  if (!verdict.trace.empty()) j["trace"] = super_nodes_json(verdict.trace);
  return j.dump(2);
}

Verdict verdict_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&j] {
    Verdict v;
    v.reason = reason_from(j.at("reason"));
    if (j.contains("trace")) v.trace = super_nodes_from(j.at("trace"));
    if (j.contains("accepted") && j.at("accepted").get<bool>() != v.accepted())
      throw InvalidInput("verdict 'accepted' disagrees with its reason");
    return v;
  });
}

std::string tree_to_json(const ReachabilityTree& tree) {
  json j;
  j["n"] = tree.n;
  j["pruned"] = tree.pruned;
  j["truncated"] = tree.truncated;
  json levels = json::array();
  for (std::size_t i = 0; i < tree.levels.size(); ++i) {
    const TreeLevel& level = tree.levels[i];
    json nodes = json::array();
    for (const auto& node : level.nodes) {
      json nj = {{"index", node.index}, {"gamma", gamma_json(node.gamma)}};
      if (node.covered_by) nj["covered_by"] = *node.covered_by;
      nodes.push_back(nj);
    }
    json edges = json::array();
    for (const auto& e : level.edges)
      edges.push_back({{"parent", e.parent},
                       {"child", e.child},
                       {"parity", e.parity},
                       {"label", label_json(e.label)},
                       {"reachable", e.reachable}});
    levels.push_back({{"level", i}, {"nodes", nodes}, {"edges", edges}});
  }
  j["levels"] = levels;
  json violations = json::array();
  for (const auto& v : tree.violations) violations.push_back(violation_json(v));
  j["violations"] = violations;
  return j.dump(2);
}

ReachabilityTree tree_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded([&j] {
    ReachabilityTree t;
    t.n = j.at("n").get<int>();
    t.pruned = j.at("pruned").get<bool>();
    t.truncated = j.value("truncated", false);
    for (const auto& lj : j.at("levels")) {
      TreeLevel level;
      for (const auto& nj : lj.at("nodes")) {
        TreeNode node;
        node.index = nj.at("index").get<std::uint64_t>();
        node.gamma = gamma_from(nj.at("gamma"));
        if (nj.contains("covered_by")) node.covered_by = nj.at("covered_by").get<std::uint64_t>();
        level.nodes.push_back(node);
      }
      for (const auto& ej : lj.at("edges")) {
        TreeEdge e;
        e.parent = ej.at("parent").get<std::uint64_t>();
        e.child = ej.at("child").get<std::uint64_t>();
        e.parity = ej.at("parity").get<unsigned>();
        e.label = label_from(ej.at("label"));
        e.reachable = ej.at("reachable").get<bool>();
        level.edges.push_back(e);
      }
      t.levels.push_back(std::move(level));
    }
    for (const auto& v : j.at("violations")) t.violations.push_back(violation_from(v));
    return t;
  });
}

std::string tree_to_dot(const ReachabilityTree& tree) {
  std::ostringstream out;
  out << "digraph reachability_tree {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < tree.levels.size(); ++i) {
    const int level = static_cast<int>(i);
    for (const auto& node : tree.levels[i].nodes) {
      out << "  \"" << node_id(level, node.index) << "\" [label=\"" << node_label(level, node) << "\"";
      if (node.covered_by) out << ", style=dotted";
      out << "];\n";
    }
  }
  for (std::size_t i = 0; i < tree.levels.size(); ++i) {
    const int level = static_cast<int>(i);
    for (const auto& e : tree.levels[i].edges) {
      const std::string from = node_id(level, e.parent);
      if (e.reachable) {
        out << "  \"" << from << "\" -> \"" << node_id(level + 1, e.child) << "\" [label=\"" << e.parity << "\"];\n";
      } else {
        const std::string sink = "X" + std::to_string(level + 1) + "." + std::to_string(e.child);
        out << "  \"" << sink << "\" [shape=point];\n";
        out << "  \"" << from << "\" -> \"" << sink << "\" [label=\"" << e.parity << "\", style=dashed];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string stg_to_dot(const StateTransitionGraph& stg) {
  std::ostringstream out;
  out << "digraph state_transitions {\n";
  for (std::uint32_t s = 0; s < stg.size(); ++s) {
    out << "  \"" << bit_string(s, stg.n) << "\"";
    if (!stg.reachable(s)) out << " [style=dashed]";
    out << ";\n";
  }
  for (std::uint32_t s = 0; s < stg.size(); ++s)
    out << "  \"" << bit_string(s, stg.n) << "\" -> \"" << bit_string(stg.successor[s], stg.n) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string stg_to_json(const StateTransitionGraph& stg) {
  json states = json::array();
  for (std::uint32_t s = 0; s < stg.size(); ++s)
    states.push_back({{"state", bit_string(s, stg.n)},
                      {"next", bit_string(stg.successor[s], stg.n)},
                      {"predecessors", stg.predecessor_count[s]}});
  json j = {{"n", stg.n}, {"states", states}};
  return j.dump(2);
}

}  // namespace ncca
