#ifndef HM_ERRORS_HPP
#define HM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hm {

/// Violated precondition or malformed input. CLI maps this to exit code 2.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Search or solver budget exceeded. CLI maps this to exit code 3.
struct resource_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An interval comparison could not be decided at the requested precision.
struct indeterminate_precision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hm

#endif  // HM_ERRORS_HPP
