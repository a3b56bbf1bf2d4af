#pragma once

#include <stdexcept>

namespace ggk {

/// Raised when a theory-level invariant fails (a non-integral genus, an
/// unrealizable triple, ...). Never expected to fire.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ggk
