#pragma once

#include <stdexcept>
#include <string>

namespace zel {

/// Violation of an operation's mathematical precondition (mismatched sizes,
/// different cuspidal support, ...).  The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zel
