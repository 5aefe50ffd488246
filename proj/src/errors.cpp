#include "convexlab/errors.hpp"

namespace convexlab {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::numeric_domain: return "numeric-domain";
    case ErrorKind::origin_not_interior: return "origin-not-interior";
    case ErrorKind::degeneracy: return "degeneracy";
    case ErrorKind::unsupported_representation: return "unsupported-representation";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::io: return "io";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

ConvergenceError::ConvergenceError(const std::string& message, double residual)
    : Error(ErrorKind::convergence, message), residual_(residual) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace convexlab
