#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncca/rule.hpp"

namespace ncca {

/// Per-cell rule assignment of a non-uniform CA under periodic boundary.
class RuleVector {
 public:
  RuleVector() = default;
  explicit RuleVector(std::vector<RuleTable> rules) : rules_(std::move(rules)) {}
  RuleVector(std::initializer_list<unsigned> numbers);

  /// Parses "192,136,184" (whitespace around numbers tolerated).
  static RuleVector parse(std::string_view text);

  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  RuleTable operator[](std::size_t i) const { return rules_[i]; }
  /// Cyclic access; any integer index is folded into 0..n-1.
  RuleTable cyclic(long long i) const;
  const std::vector<RuleTable>& rules() const { return rules_; }

  /// Cell k of the result is cell (i + k) mod n of this vector.
  RuleVector rotated(std::size_t k) const;

  std::string to_string() const;

  friend bool operator==(const RuleVector&, const RuleVector&) = default;

 private:
  std::vector<RuleTable> rules_;
};

/// Global state. Cell 0 is the leftmost character of the textual form and
/// the most significant bit of index().
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<std::uint8_t> bits);

  static Configuration parse(std::string_view text);
  static Configuration from_index(std::uint64_t index, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  unsigned operator[](std::size_t i) const { return bits_[i]; }
  /// Cyclic access.
  unsigned cyclic(long long i) const;
  std::size_t popcount() const;
  /// Requires size() <= 64.
  std::uint64_t index() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Element i is the RMT (c[i-1], c[i], c[i+1]) with cyclic indexing.
/// Throws InvalidInput for n < 3.
std::vector<Rmt> rmt_sequence(const Configuration& config);

/// One synchronous update. Throws InvalidInput on length mismatch or n < 3.
Configuration next_config(const RuleVector& rv, const Configuration& config);

}  // namespace ncca
