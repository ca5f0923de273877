#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccg {

enum class ErrorKind {
  InvalidPoint,       // off the model surface beyond tolerance
  ContractViolation,  // caller broke a documented precondition
  Degenerate,         // coincident points, collinear triangles, identical lines
  OutOfModel,         // outside the unit disk
  Domain,             // argument outside the function's domain
  Range,              // length outside the working range
  OutOfScope,         // valid geometry the library deliberately does not handle
  Infeasible,         // constraint system has no solution
  InfeasibleGeometry  // constraints hold but no triangle realizes them
};

std::string_view to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GeometryError(kind, what);
}

}  // namespace ccg
