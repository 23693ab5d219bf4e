#ifndef STONEWORK_ERRORS_HPP
#define STONEWORK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stonework {

/// Caller misuse: bad arguments, family mismatch, malformed input. CLI exit code 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was hit before the computation finished. CLI exit code 3.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// A filter action needed an ideal outside the explored family.
struct DepthMarginError : std::runtime_error {
  explicit DepthMarginError(const std::string& what) : std::runtime_error(what) {}
};

/// s.chi requested for a pair with dom(s) not in the filter.
struct ComposabilityError : std::runtime_error {
  explicit ComposabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Element grammar violation, with the byte offset of the failure.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  size_t pos;
};

} // namespace stonework

#endif
