#pragma once

#include <stdexcept>
#include <string>

namespace fss {

// Every failure the engine can report.  Codes are split into two
// categories for the CLI exit status: input errors (bad files, bad
// schemas, bad field data) and pipeline errors (anything that goes
// wrong after a well-formed algebra has been accepted).
enum class ErrorCode {
  DivisionByZero,
  MixedFields,
  ShapeMismatch,
  ParseError,
  SyntaxError,
  InconsistentDims,
  FieldTooSmall,
  NotAHomomorphism,
  RadicalNotNilpotent,
  NonSplitSimple,
  ImageNotFull,
  NoIdealIdentity,
  NotNilpotentDefect,
  LiftDiverged,
  DegenerateBasePoint,
  SectionSingular,
  MaxDepthExceeded,
  TermBlowup,
  ClosureCapExceeded,
  GroupTooLarge,
  TooLargeToEnumerate,
  Mismatch,
  Internal,
};

const char* error_code_name(ErrorCode code);

// true for errors caused by the input document itself (CLI exit 2),
// false for pipeline errors (CLI exit 3).
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fss
