#include "hamfix/errors.hpp"

namespace hamfix {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::ConstantTerm: return "ConstantTermError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::ZeroDivision: return "ZeroDivision";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::ZeroXi: return "ZeroXi";
    case ErrorKind::IterationLimit: return "IterationLimit";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::NoneFound: return "NoneFound";
    case ErrorKind::DegenerateOrbit: return "DegenerateOrbit";
    case ErrorKind::WeightsDontSpan: return "WeightsDontSpan";
    case ErrorKind::NotRegularValue: return "NotRegularValue";
    case ErrorKind::IrrationalPeriodStructure: return "IrrationalPeriodStructure";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::NullClass: return "NullClass";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotFano: return "NotFano";
    case ErrorKind::NonFreeAction: return "NonFreeAction";
    case ErrorKind::ThetaBelowPeriod: return "ThetaBelowPeriod";
  }
  return "Unknown";
}

bool is_hypothesis_failure(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotMonotone:
    case ErrorKind::NotFano:
    case ErrorKind::NonFreeAction:
    case ErrorKind::ThetaBelowPeriod:
      return true;
    default:
      return false;
  }
}

}  // namespace hamfix
