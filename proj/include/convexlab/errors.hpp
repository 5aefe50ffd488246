#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace convexlab {

// Every failure surfaced by the library is one of these kinds. Report rows
// carry the kind's name, so the strings are part of the report schema.
enum class ErrorKind {
  invalid_argument,
  numeric_domain,
  origin_not_interior,
  degeneracy,
  unsupported_representation,
  convergence,
  precondition,
  io,
  parse,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

// Raised by iterative solvers that hit their iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double residual);
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace convexlab
