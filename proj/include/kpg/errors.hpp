#pragma once

#include <stdexcept>
#include <string>

namespace kpg {

// A proven-impossible condition was observed (e.g. a counting polynomial
// came out with non-integer coefficients).  Indicates a bug, never rounded
// over or ignored.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// An oracle instance was refused because it exceeds the configured work
// budget.  Never silently truncated.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kpg
