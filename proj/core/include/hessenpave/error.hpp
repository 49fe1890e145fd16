#pragma once

#include <stdexcept>
#include <string>

namespace hessenpave {

/// Bad caller input: malformed text, rank out of range, violated preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations disagreed. Always indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hessenpave
