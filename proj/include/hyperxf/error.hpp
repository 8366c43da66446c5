#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperxf {

/// Machine-readable category of a library failure.
///
/// The verifier's rejection sampler keys on these; `Inadmissible`,
/// `AuxDenominatorZero`, `DegenerateLower` and `DegenerateClosedForm` mark a
/// parameter point that is legal input but lies on a degenerate locus.
enum class ErrorKind {
  InvalidArgument,
  DivisionByZero,
  OrderMismatch,
  NotInvertible,
  DegenerateLower,
  AuxDenominatorZero,
  DegenerateClosedForm,
  ConstraintViolated,
  Inadmissible,
  UnknownId,
  NoAdmissibleSample,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for the degeneracy kinds a sampler should reject and redraw on.
  bool is_degeneracy() const noexcept {
    return kind_ == ErrorKind::DegenerateLower ||
           kind_ == ErrorKind::AuxDenominatorZero ||
           kind_ == ErrorKind::DegenerateClosedForm ||
           kind_ == ErrorKind::Inadmissible ||
           kind_ == ErrorKind::DivisionByZero ||
           kind_ == ErrorKind::NotInvertible;
  }

 private:
  ErrorKind kind_;
};

}  // namespace hyperxf
