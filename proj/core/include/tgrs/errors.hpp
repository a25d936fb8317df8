#ifndef TGRS_ERRORS_HPP
#define TGRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tgrs {

// Every precondition violation and recoverable failure carries one of these
// codes so callers (and the CLI exit-code mapping) can dispatch without
// string matching.
enum class Errc {
  NonPrime,
  ReducibleModulus,
  UnsupportedSize,
  FieldMismatch,
  DivisionByZero,
  EvenCharacteristic,
  OddCharacteristic,
  NotASubfieldDegree,
  NotSquare,
  DimensionMismatch,
  ZeroCode,
  FullSpace,
  BadIndexSet,
  BadTransform,
  BudgetExceeded,
  RepeatedEvaluationPoint,
  ZeroEvaluationPoint,
  BadSize,
  OutOfTheoremRange,
  SetTooSmall,
  WrongShape,
  BadShape,
  ExcludedEta,
  BadParameter,
  BadModulus,
  PointNotInSubfield,
  BadBeta,
  NotSelfOrthogonal,
  ZeroNotLast,
  InvalidParams,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tgrs

#endif
