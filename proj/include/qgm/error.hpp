#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgm {

enum class Errc {
  CapExceeded,
  DegreeMismatch,
  NotSubgroup,
  NotNormal,
  NotAbelian,
  OrderMismatch,
  NotWellDefined,
  NotBijective,
  DivisionByZero,
  ShapeMismatch,
  Inconsistent,
  NotFiniteOrder,
  NotUnitary,
  NotInGroup,
  FreePartPresent,
  NotQuasiTransitive,
  InvalidAutomorphism,
  NotRepresentation,
  InvalidFamily,
  InvalidArgument,
  Parse,
};

std::string_view errc_name(Errc code);

/// Single exception type for the library; `code()` names the failure class.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotWellDefined: return "NotWellDefined";
    case Errc::NotBijective: return "NotBijective";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::NotFiniteOrder: return "NotFiniteOrder";
    case Errc::NotUnitary: return "NotUnitary";
    case Errc::NotInGroup: return "NotInGroup";
    case Errc::FreePartPresent: return "FreePartPresent";
    case Errc::NotQuasiTransitive: return "NotQuasiTransitive";
    case Errc::InvalidAutomorphism: return "InvalidAutomorphism";
    case Errc::NotRepresentation: return "NotRepresentation";
    case Errc::InvalidFamily: return "InvalidFamily";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace qgm
