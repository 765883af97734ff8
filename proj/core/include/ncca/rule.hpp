#pragma once

// Rule min terms (RMTs), RMT sets and Wolfram rule tables for two-state,
// three-neighbourhood cellular automata.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace ncca {

class RmtSet;

/// A neighbourhood pattern (left, self, right) packed as a 3-bit number,
/// left cell in the most significant bit.
class Rmt {
 public:
  constexpr Rmt() = default;
  /// Throws InvalidInput if value > 7.
  explicit Rmt(unsigned value);

  static constexpr Rmt from_bits(unsigned left, unsigned self, unsigned right) {
    Rmt r;
    r.value_ = static_cast<std::uint8_t>(((left & 1u) << 2) | ((self & 1u) << 1) | (right & 1u));
    return r;
  }
  static constexpr Rmt unchecked(unsigned value) {
    Rmt r;
    r.value_ = static_cast<std::uint8_t>(value & 7u);
    return r;
  }

  constexpr unsigned value() const { return value_; }
  constexpr unsigned left() const { return (value_ >> 2) & 1u; }
  constexpr unsigned self() const { return (value_ >> 1) & 1u; }
  constexpr unsigned right() const { return value_ & 1u; }

  /// The two RMTs that can follow this one in an RMT sequence: 2r and 2r+1 (mod 8).
  constexpr std::array<Rmt, 2> successors() const {
    return {unchecked(2u * value_), unchecked(2u * value_ + 1u)};
  }
  /// {r, r+4 mod 8}: both members have the same successors.
  RmtSet equivalent() const;
  /// {2*floor(r/2), 2*floor(r/2)+1}: the successor pair of a common parent.
  RmtSet sibling() const;

  friend constexpr bool operator==(Rmt, Rmt) = default;
  friend constexpr auto operator<=>(Rmt, Rmt) = default;

 private:
  std::uint8_t value_ = 0;
};

/// Subset of {0..7} stored as a bitmask; iterates in ascending order.
class RmtSet {
 public:
  constexpr RmtSet() = default;
  constexpr RmtSet(std::initializer_list<unsigned> values) {
    for (unsigned v : values) mask_ |= static_cast<std::uint8_t>(1u << (v & 7u));
  }
  static constexpr RmtSet from_mask(std::uint8_t mask) {
    RmtSet s;
    s.mask_ = mask;
    return s;
  }
  static constexpr RmtSet all() { return from_mask(0xFF); }

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr bool contains(Rmt r) const { return (mask_ >> r.value()) & 1u; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return __builtin_popcount(mask_); }
  constexpr void insert(Rmt r) { mask_ |= static_cast<std::uint8_t>(1u << r.value()); }
  constexpr void erase(Rmt r) { mask_ &= static_cast<std::uint8_t>(~(1u << r.value())); }
  constexpr bool is_subset_of(RmtSet other) const { return (mask_ & ~other.mask_) == 0; }

  friend constexpr RmtSet operator&(RmtSet a, RmtSet b) { return from_mask(a.mask_ & b.mask_); }
  friend constexpr RmtSet operator|(RmtSet a, RmtSet b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr bool operator==(RmtSet, RmtSet) = default;

  class iterator {
   public:
    using value_type = Rmt;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint8_t rest) : rest_(rest) {}
    constexpr Rmt operator*() const { return Rmt::unchecked(static_cast<unsigned>(__builtin_ctz(rest_))); }
    constexpr iterator& operator++() {
      rest_ &= static_cast<std::uint8_t>(rest_ - 1);
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint8_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  /// "{0,1,3}" form.
  std::string to_string() const;

 private:
  std::uint8_t mask_ = 0;
};

inline RmtSet Rmt::equivalent() const { return RmtSet::from_mask(static_cast<std::uint8_t>((1u << value_) | (1u << (value_ ^ 4u)))); }
inline RmtSet Rmt::sibling() const { return RmtSet::from_mask(static_cast<std::uint8_t>((1u << value_) | (1u << (value_ ^ 1u)))); }

/// One Wolfram rule: bit r of the rule number is the next state for RMT r.
class RuleTable {
 public:
  constexpr RuleTable() = default;
  constexpr explicit RuleTable(std::uint8_t wolfram) : wolfram_(wolfram) {}
  /// Throws InvalidInput unless 0 <= number <= 255.
  static RuleTable from_number(long long number);

  constexpr std::uint8_t wolfram() const { return wolfram_; }
  constexpr unsigned lookup(Rmt r) const { return (wolfram_ >> r.value()) & 1u; }
  constexpr unsigned operator[](Rmt r) const { return lookup(r); }

  friend constexpr bool operator==(RuleTable, RuleTable) = default;
  friend constexpr auto operator<=>(RuleTable, RuleTable) = default;

 private:
  std::uint8_t wolfram_ = 0;
};

/// Builds a rule table from eight explicit next-state bits, index = RMT.
constexpr RuleTable rule_from_bits(const std::array<unsigned, 8>& bits) {
  unsigned w = 0;
  for (unsigned r = 0; r < 8; ++r) w |= (bits[r] & 1u) << r;
  return RuleTable(static_cast<std::uint8_t>(w));
}

/// The three-condition characterisation of rules that can appear in a
/// number-conserving rule vector of five or more cells.
constexpr bool is_nc_rule(RuleTable rule) {
  auto b = [rule](unsigned r) { return rule.lookup(Rmt::unchecked(r)); };
  const bool boundary = b(0) == 0 && b(7) == 1;
  const bool low = (b(0) == b(4) && b(1) == b(5)) || (b(0) == b(1) && b(4) == b(5));
  const bool high = (b(2) == b(6) && b(3) == b(7)) || (b(2) == b(3) && b(6) == b(7));
  return boundary && low && high;
}

inline constexpr std::array<std::uint8_t, 9> kNumberConservingRules = {136, 170, 184, 192, 204,
                                                                       226, 238, 240, 252};

/// Rules that only occur in number-conserving vectors of exactly four cells.
/// Deliberately not accepted by is_nc_rule().
inline constexpr std::array<std::uint8_t, 6> kFourCellOnlyRules = {160, 172, 202, 216, 228, 250};

/// Sibling pair k: {2k, 2k+1}.
constexpr RmtSet sibling_pair(int k) {
  return RmtSet{static_cast<unsigned>(2 * k), static_cast<unsigned>(2 * k + 1)};
}
/// Equivalent pair k: {k, k+4}.
constexpr RmtSet equivalent_pair(int k) {
  return RmtSet{static_cast<unsigned>(k), static_cast<unsigned>(k + 4)};
}

}  // namespace ncca
