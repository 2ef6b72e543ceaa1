#pragma once

#include <stdexcept>
#include <string>

namespace mixnull {

/// Malformed or out-of-contract input supplied by a caller.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed; indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mixnull
