#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamfix {

/// Every failure raised by the library carries one of these kinds.  Kinds in
/// the "hypothesis" group mean the input is well formed but a hypothesis of
/// the bound does not hold; everything else is an input or domain error.
enum class ErrorKind {
  InvalidInput,
  Parse,
  ConstantTerm,
  Domain,
  ZeroDivision,
  DimensionMismatch,
  DependentInput,
  NotInKernel,
  ZeroXi,
  IterationLimit,
  RingMismatch,
  InvalidShape,
  InvalidType,
  NoneFound,
  DegenerateOrbit,
  WeightsDontSpan,
  NotRegularValue,
  IrrationalPeriodStructure,
  UnsupportedFamily,
  NullClass,
  InvalidComplex,
  // hypothesis failures
  NotMonotone,
  NotFano,
  NonFreeAction,
  ThetaBelowPeriod,
};

std::string_view kind_name(ErrorKind kind) noexcept;
bool is_hypothesis_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace hamfix
