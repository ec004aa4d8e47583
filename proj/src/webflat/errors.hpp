#pragma once

#include <stdexcept>
#include <string>

namespace webflat {

enum class ErrorCode {
  DivisionByZero,
  RingMismatch,
  UnknownVariable,
  ZeroPolynomial,
  InvalidArgument,
  DegenerateForm,
  NotSingular,
  NonIsolated,
  GenericityFailure,
  NotInvariant,
  Degenerate,
  InvariantLine,
  IncompleteFactorization,
  SingularMatrix,
  DegenerateInfinity,
  NotSimpleInflection,
  NotMaximalInflection,
  FiberConditionFailed,
  NonDivisible,
  NotACubicWeb,
  NonReducedWeb,
  DegreeZero,
  DegreeDrop,
  SyntaxError,
  NonLinearDifferential,
  ResourceLimit,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace webflat
