#include "ncca/weights.hpp"

#include <algorithm>
#include <vector>

namespace ncca {

std::variant<WeightedSet, WeightConflict> find_next_weight(RuleTable rule, const WeightedSet& current, RmtSet keep) {
  WeightedSet out;
  for (Rmt r : current.rmts()) {
    const int w = next_weight(rule, r, current.weight(r));
    for (Rmt c : r.successors()) {
      if (!keep.contains(c)) continue;
      if (auto prev = out.find(c); prev && *prev != w) return WeightConflict{c, *prev, w};
      out.set(c, w);
    }
  }
  return out;
}

SuperNode SuperNode::root() {
  SuperNode node;
  for (int k = 0; k < 4; ++k) node[k] = WeightedSet(sibling_pair(k), 0);
  return node;
}

SuperNode SuperNode::restricted_second_last() const {
  SuperNode out;
  for (int k = 0; k < 4; ++k) out[k] = (*this)[k].restricted(second_last_mask(k));
  return out;
}

SuperNode SuperNode::restricted_last() const {
  SuperNode out;
  for (int k = 0; k < 4; ++k) out[k] = (*this)[k].restricted(last_mask(k));
  return out;
}

namespace {

// Rows are RMTs, columns are gamma_0..gamma_3.
const std::vector<int> kAllowed[8][4] = {
    {{0}, {0, 1}, {-1, 0}, {-1, 0, 1}},
    {{0}, {0, 1}, {-1, 0}, {-1, 0, 1}},
    {{-1, 0}, {-1, 0, 1}, {-2, -1, 0}, {-1, 0}},
    {{-1, 0}, {-1, 0, 1}, {-2, -1, 0}, {-1, 0}},
    {{0, 1}, {0, 1, 2}, {-1, 0, 1}, {0, 1}},
    {{0, 1}, {0, 1, 2}, {-1, 0, 1}, {0, 1}},
    {{-1, 0, 1}, {0, 1}, {-1, 0}, {0}},
    {{-1, 0, 1}, {0, 1}, {-1, 0}, {0}},
};

}  // namespace

std::span<const int> allowed_weights(int k, Rmt r) {
  const auto& v = kAllowed[r.value()][k & 3];
  return {v.data(), v.size()};
}

bool weight_allowed(int k, Rmt r, int weight) {
  const auto allowed = allowed_weights(k, r);
  return std::find(allowed.begin(), allowed.end(), weight) != allowed.end();
}

std::optional<WeightDomainViolation> check_weight_domain(const SuperNode& node) {
  for (int k = 0; k < 4; ++k)
    for (Rmt r : node[k].rmts())
      if (!weight_allowed(k, r, node[k].weight(r))) return WeightDomainViolation{k, r, node[k].weight(r)};
  return std::nullopt;
}

}  // namespace ncca
