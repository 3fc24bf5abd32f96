#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bethe {

/// Every failure raised by the library. `kind()` is a stable short tag
/// ("division_by_zero", "chart_violation", ...) that the CLI reports verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, const char* kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

} // namespace bethe
