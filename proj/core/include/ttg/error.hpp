#pragma once

#include <stdexcept>
#include <string>

namespace ttg {

/// Every failure carries a stable kind name (e.g. "CycleError", "TruncationTooSmall")
/// so callers and the CLI can branch on it without parsing messages.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace ttg
