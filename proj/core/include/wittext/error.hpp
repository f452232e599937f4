#pragma once

#include <stdexcept>
#include <string>

namespace wittext {

enum class Errc {
  NonPrime,
  PrimeTooSmall,
  ZeroConstant,
  DivisionByZero,
  IndexOutOfRange,
  WeightNotInLambda,
  UnsupportedHeight,
  NonzeroCharacter,
  MixedCharacters,
  ConditionsViolated,
  WrongFieldContext,
  NotInPrimeField,
  DimensionOverflow,
  InvalidArgument,
};

const char* errc_name(Errc c);

/// Library-wide exception. Carries a machine-checkable code alongside the
/// human-readable message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace wittext
