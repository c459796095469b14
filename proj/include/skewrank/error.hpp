#pragma once

#include <stdexcept>
#include <string>

namespace skewrank {

/// Malformed input: bad shape literal, invalid code, violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity failed. Never repaired, always surfaced.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantError(what);
}

}  // namespace skewrank
