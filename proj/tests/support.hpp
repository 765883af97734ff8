#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ncca/automaton.hpp"
#include "ncca/rule.hpp"

namespace ncca::test_support {

inline std::vector<RuleTable> nc_alphabet() {
  std::vector<RuleTable> out;
  for (auto w : kNumberConservingRules) out.emplace_back(w);
  return out;
}

/// Vector number `index` in lexicographic order over the alphabet, cell 0 most significant.
inline RuleVector vector_at(std::uint64_t index, int n, const std::vector<RuleTable>& alphabet) {
  std::vector<RuleTable> rules(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    rules[static_cast<std::size_t>(i)] = alphabet[index % alphabet.size()];
    index /= alphabet.size();
  }
  return RuleVector(std::move(rules));
}

inline std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

inline RuleVector random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> rule(0, 255);
  std::vector<RuleTable> rules;
  for (int i = 0; i < n; ++i) rules.emplace_back(static_cast<std::uint8_t>(rule(rng)));
  return RuleVector(std::move(rules));
}

inline RuleVector random_nc_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::size_t> pick(0, kNumberConservingRules.size() - 1);
  std::vector<RuleTable> rules;
  for (int i = 0; i < n; ++i) rules.emplace_back(kNumberConservingRules[pick(rng)]);
  return RuleVector(std::move(rules));
}

}  // namespace ncca::test_support
