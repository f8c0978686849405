#pragma once

#include <stdexcept>
#include <string>

namespace metent {

/// Broad failure categories. The CLI maps them onto process exit codes.
enum class ErrorKind {
  InvalidInput,  ///< malformed or out-of-domain arguments
  NonCompact,    ///< the entropy is infinite for the requested configuration
  CapExceeded,   ///< an enumeration or scan hit its configured cap
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

class NonCompactRegime : public Error {
 public:
  explicit NonCompactRegime(const std::string& what) : Error(ErrorKind::NonCompact, what) {}
};

/// Raised when an enumeration would exceed its cap. The size that was about to be
/// produced is still reported so callers can print it.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, double reported_size)
      : Error(ErrorKind::CapExceeded, what), reported_size_(reported_size) {}

  [[nodiscard]] double reported_size() const noexcept { return reported_size_; }

 private:
  double reported_size_;
};

}  // namespace metent
