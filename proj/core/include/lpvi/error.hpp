#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpvi {

/// Failure classes raised by the library. The CLI maps each onto an exit code.
enum class ErrorKind {
  InvalidInput,
  Shape,
  UnsupportedSpace,
  UnsupportedRetraction,
  UnsupportedOracle,
  Evaluation,
  Estimation,
  Configuration,
  Divergence,
  Resource,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace lpvi
