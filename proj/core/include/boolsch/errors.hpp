#pragma once

#include <stdexcept>
#include <string>

namespace boolsch {

// A word with a repeated letter, or a diagram request outside the boolean
// range of the calculus.
struct NotBooleanError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised instead of silently attempting an enumeration that would not fit
// the configured budget (e.g. full Weyl groups of E7/E8).
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace boolsch
