#pragma once

#include <stdexcept>
#include <string>

namespace qv {

enum class ErrorCode {
  ParseError,
  InvalidAntichain,
  IncompleteCover,
  NotBijection,
  IncompleteInput,
  NotAMember,
  UndefinedOnVertex,
  MalformedDecomposition,
  InvalidDepth,
  IsTorsion,
  HasNontrivialFiniteOrbits,
  InvalidOrder,
  BoundExceeded,
  InvariantFalsified,
  LimitExceeded,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/** Domain error carrying a machine-checkable code alongside the message. */
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qv
