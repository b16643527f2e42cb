#pragma once

#include <stdexcept>
#include <string>

namespace epiword {

/// Malformed or out-of-range input: bad letters, orders, specs, lengths.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite directive word ran out before the requested prefix length.
class InsufficientDirective : public InputError {
 public:
  using InputError::InputError;
};

/// A prefix-scale check on an infinite word could not stabilise within its
/// letter budget. Not the same as a negative answer.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace epiword
