#pragma once

#include <stdexcept>
#include <string>

namespace valgraph {

enum class ErrorCode {
  SpecInvalid,
  PrecisionExhausted,
  DivisionByZero,
  FactorizationTooLarge,
  NotAUnit,
  NotEnumerable,
  TableInconsistent,
  BadPresentation,
  ClosureEscapesCentralizer,
  VertexMismatch,
  YInN,
  WindowInconclusive,
  ConditionsDisagree,
  EmptyLevelSet,
  HypothesisNotMet,
  AffineRuleViolated,
  SearchExhausted,
  DifferenceSearchExhausted,
  Usage,
  Internal,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& msg)
      : std::runtime_error(std::string(error_name(c)) + ": " + msg), code_(c) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace valgraph
