#include "hyperxf/error.hpp"

namespace hyperxf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::OrderMismatch: return "order-mismatch";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::DegenerateLower: return "degenerate-lower";
    case ErrorKind::AuxDenominatorZero: return "aux-denominator-zero";
    case ErrorKind::DegenerateClosedForm: return "degenerate-closed-form";
    case ErrorKind::ConstraintViolated: return "constraint-violated";
    case ErrorKind::Inadmissible: return "inadmissible";
    case ErrorKind::UnknownId: return "unknown-id";
    case ErrorKind::NoAdmissibleSample: return "no-admissible-sample";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace hyperxf
