#pragma once

// RMT weights: the running surplus (+) or deficit (-) of 1s that an RMT
// sequence has accumulated relative to its image, tracked per RMT set.

#include <array>
#include <optional>
#include <span>
#include <variant>

#include "ncca/rule.hpp"

namespace ncca {

/// A set of RMTs together with one integer weight per member.
class WeightedSet {
 public:
  constexpr WeightedSet() = default;
  /// Every member of `rmts` gets weight `weight`.
  constexpr WeightedSet(RmtSet rmts, int weight) : rmts_(rmts) {
    for (Rmt r : rmts) weights_[r.value()] = weight;
  }

  constexpr RmtSet rmts() const { return rmts_; }
  constexpr bool contains(Rmt r) const { return rmts_.contains(r); }
  constexpr bool empty() const { return rmts_.empty(); }

  /// Weight of a member RMT. Undefined (returns 0) for non-members.
  constexpr int weight(Rmt r) const { return weights_[r.value()]; }
  /// Weight of r when r is a member.
  constexpr std::optional<int> find(Rmt r) const {
    if (!rmts_.contains(r)) return std::nullopt;
    return weights_[r.value()];
  }
  /// True when r is a member and carries weight w.
  constexpr bool has(unsigned r, int w) const {
    const Rmt rmt = Rmt::unchecked(r);
    return rmts_.contains(rmt) && weights_[r] == w;
  }

  constexpr void set(Rmt r, int w) {
    rmts_.insert(r);
    weights_[r.value()] = w;
  }

  /// Keeps only members of `mask`; surviving weights are unchanged.
  constexpr WeightedSet restricted(RmtSet mask) const {
    WeightedSet out = *this;
    out.rmts_ = rmts_ & mask;
    for (unsigned r = 0; r < 8; ++r)
      if (!out.rmts_.contains(Rmt::unchecked(r))) out.weights_[r] = 0;
    return out;
  }

  /// Same members with the same weights (non-member slots are kept at 0).
  friend constexpr bool operator==(const WeightedSet&, const WeightedSet&) = default;

 private:
  RmtSet rmts_;
  std::array<int, 8> weights_{};
};

/// Weight carried to both successors of `parent`, given the rule of the cell
/// whose RMT `parent` is: +1 when a 1 in the middle cell becomes 0, -1 when
/// a 0 becomes 1, unchanged otherwise.
constexpr int next_weight(RuleTable rule, Rmt parent, int parent_weight) {
  const unsigned next = rule.lookup(parent);
  if (parent.self() == 1 && next == 0) return parent_weight + 1;
  if (parent.self() == 0 && next == 1) return parent_weight - 1;
  return parent_weight;
}

/// Two parents pushed different weights onto the same successor RMT.
struct WeightConflict {
  Rmt child;
  int first = 0;
  int second = 0;
  friend bool operator==(const WeightConflict&, const WeightConflict&) = default;
};

/// Successor set of `current` under `rule` with propagated weights, or the
/// first weight conflict met (members visited in ascending order). Children
/// outside `keep` are dropped before they are compared, so a clash on an RMT
/// that the periodic boundary rules out is not reported.
std::variant<WeightedSet, WeightConflict> find_next_weight(RuleTable rule, const WeightedSet& current,
                                                           RmtSet keep = RmtSet::all());

/// The per-level state of the linear decision procedure: four weighted
/// RMT sets, one per value of (s[n-1], s[0]).
struct SuperNode {
  std::array<WeightedSet, 4> gamma;

  /// Level 0: gamma_k = {2k, 2k+1}, all weights 0.
  static SuperNode root();

  WeightedSet& operator[](int k) { return gamma[static_cast<std::size_t>(k)]; }
  const WeightedSet& operator[](int k) const { return gamma[static_cast<std::size_t>(k)]; }

  /// gamma_0, gamma_1 keep even RMTs; gamma_2, gamma_3 keep odd RMTs.
  SuperNode restricted_second_last() const;
  /// gamma_k keeps {k, k+4}.
  SuperNode restricted_last() const;

  friend bool operator==(const SuperNode&, const SuperNode&) = default;
};

/// Masks applied at levels n-2 and n-1.
constexpr RmtSet second_last_mask(int k) { return k < 2 ? RmtSet{0, 2, 4, 6} : RmtSet{1, 3, 5, 7}; }
constexpr RmtSet last_mask(int k) { return equivalent_pair(k); }

/// Weights an RMT may carry inside gamma_k of a number-conserving CA.
std::span<const int> allowed_weights(int k, Rmt r);
bool weight_allowed(int k, Rmt r, int weight);

/// First (k, r, w) in `node` outside the allowed table, if any.
struct WeightDomainViolation {
  int k = 0;
  Rmt rmt;
  int weight = 0;
};
std::optional<WeightDomainViolation> check_weight_domain(const SuperNode& node);

}  // namespace ncca
