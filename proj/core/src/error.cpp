#include "lpvi/error.hpp"

namespace lpvi {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::UnsupportedSpace: return "unsupported-space";
    case ErrorKind::UnsupportedRetraction: return "unsupported-retraction";
    case ErrorKind::UnsupportedOracle: return "unsupported-oracle";
    case ErrorKind::Evaluation: return "evaluation";
    case ErrorKind::Estimation: return "estimation";
    case ErrorKind::Configuration: return "configuration";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::Resource: return "resource";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace lpvi
