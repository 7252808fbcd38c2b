#pragma once
#include <stdexcept>
#include <string>

namespace omega {

enum class ErrorCode {
  InvalidArgument,
  OversizeRequest,
  AmbientViolation,
  LengthMismatch,
  UnsupportedPattern,
  DepthTooLarge,
  AlphabetMismatch,
  Reducible,
  WeightSum,
  UnsupportedSchedule,
  SyndeticCenterNonEmpty,
  Indeterminate,
  GenericityFailure,
  NotTransitive,
  ConfigViolatesGrowth,
  AmbientTooSmall,
  NotProperSubset,
  SlackTooTight,
  DepthCap,
  GrowthViolated,
  BoundaryValue,
  DegenerateObservable,
  NotAPseudoOrbit,
  PseudoOrbitTooLoose,
  Io,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& what)
      : std::runtime_error(std::string(error_name(c)) + ": " + what), code_(c) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& what) { throw Error(c, what); }

}  // namespace omega
