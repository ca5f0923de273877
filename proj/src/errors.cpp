#include "ccg/errors.hpp"

namespace ccg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPoint: return "invalid point";
    case ErrorKind::ContractViolation: return "contract violation";
    case ErrorKind::Degenerate: return "degenerate input";
    case ErrorKind::OutOfModel: return "out of model";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Range: return "range error";
    case ErrorKind::OutOfScope: return "out of scope";
    case ErrorKind::Infeasible: return "infeasible input";
    case ErrorKind::InfeasibleGeometry: return "infeasible geometry";
  }
  return "error";
}

}  // namespace ccg
