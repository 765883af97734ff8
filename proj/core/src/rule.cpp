#include "ncca/rule.hpp"

#include <string>

#include "ncca/error.hpp"

namespace ncca {

Rmt::Rmt(unsigned value) {
  if (value > 7) throw InvalidInput("RMT must be in 0..7, got " + std::to_string(value));
  value_ = static_cast<std::uint8_t>(value);
}

std::string RmtSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Rmt r : *this) {
    if (!first) out += ',';
    out += std::to_string(r.value());
    first = false;
  }
  out += '}';
  return out;
}

RuleTable RuleTable::from_number(long long number) {
  if (number < 0 || number > 255)
    throw InvalidInput("rule number must be in 0..255, got " + std::to_string(number));
  return RuleTable(static_cast<std::uint8_t>(number));
}

}  // namespace ncca
