#pragma once

#include <stdexcept>
#include <string>

namespace flatbound {

enum class ErrorCode {
  CapExceeded,
  InfiniteOrder,
  DimensionMismatch,
  NotPositiveDefinite,
  NotCrystallographic,
  NotBieberbach,
  MissingPresentation,
  NonIntegralRelator,
  NotAHomomorphism,
  TrivialSign,
  NotNormalizing,
  SquareOutside,
  AlreadyInside,
  HolonomyNotOddCyclic,
  HolonomyNotZ2,
  AlreadyOrientable,
  BoundaryMismatch,
  UnknownEntry,
  IncompatibleStyle,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported with this exception; code() tells them apart.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace flatbound
