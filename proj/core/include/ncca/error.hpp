#pragma once

#include <stdexcept>
#include <string>

namespace ncca {

/// Malformed or out-of-domain input (bad rule number, wrong length, n too small).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request that would exceed a configured size or work cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ncca
