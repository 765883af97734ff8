#include "ncca/automaton.hpp"

#include <charconv>
#include <string>

#include "ncca/error.hpp"

namespace ncca {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::size_t fold(long long i, std::size_t n) {
  const long long m = static_cast<long long>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

}  // namespace

RuleVector::RuleVector(std::initializer_list<unsigned> numbers) {
  rules_.reserve(numbers.size());
  for (unsigned v : numbers) rules_.push_back(RuleTable::from_number(v));
}

RuleVector RuleVector::parse(std::string_view text) {
  std::vector<RuleTable> rules;
  text = trim(text);
  if (text.empty()) throw InvalidInput("empty rule vector");
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw InvalidInput("not a rule number: '" + std::string(token) + "'");
    rules.push_back(RuleTable::from_number(value));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return RuleVector(std::move(rules));
}

RuleTable RuleVector::cyclic(long long i) const { return rules_[fold(i, rules_.size())]; }

RuleVector RuleVector::rotated(std::size_t k) const {
  std::vector<RuleTable> out(rules_.size());
  for (std::size_t i = 0; i < rules_.size(); ++i) out[i] = rules_[(i + k) % rules_.size()];
  return RuleVector(std::move(out));
}

std::string RuleVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rules_[i].wolfram());
  }
  return out;
}

Configuration::Configuration(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw InvalidInput("configuration cells must be 0 or 1");
}

Configuration Configuration::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InvalidInput("empty configuration");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidInput("configuration must be a 0/1 string");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Configuration(std::move(bits));
}

Configuration Configuration::from_index(std::uint64_t index, std::size_t n) {
  if (n == 0 || n > 64) throw InvalidInput("configuration length must be in 1..64");
  if (n < 64 && (index >> n) != 0) throw InvalidInput("index does not fit in n cells");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1u);
  return Configuration(std::move(bits));
}

unsigned Configuration::cyclic(long long i) const { return bits_[fold(i, bits_.size())]; }

std::size_t Configuration::popcount() const {
  std::size_t c = 0;
  for (auto b : bits_) c += b;
  return c;
}

std::uint64_t Configuration::index() const {
  if (bits_.size() > 64) throw InvalidInput("configuration longer than 64 cells has no index");
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::string Configuration::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

std::vector<Rmt> rmt_sequence(const Configuration& config) {
  const std::size_t n = config.size();
  if (n < 3) throw InvalidInput("RMT sequences need at least 3 cells");
  std::vector<Rmt> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long long li = static_cast<long long>(i);
    out.push_back(Rmt::from_bits(config.cyclic(li - 1), config[i], config.cyclic(li + 1)));
  }
  return out;
}

Configuration next_config(const RuleVector& rv, const Configuration& config) {
  if (rv.size() != config.size())
    throw InvalidInput("rule vector has " + std::to_string(rv.size()) + " cells, configuration has " +
                       std::to_string(config.size()));
  const auto seq = rmt_sequence(config);
  std::vector<std::uint8_t> next(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) next[i] = static_cast<std::uint8_t>(rv[i].lookup(seq[i]));
  return Configuration(std::move(next));
}

}  // namespace ncca
