#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gradix {

enum class ErrorCode {
  FieldMismatch,
  DivisionByZero,
  CharacteristicForbidden,
  InvalidField,
  RingMismatch,
  TooManyVariables,
  ExponentOverflow,
  Parse,
  NotZeroDimensional,
  RadicalNotMaximal,
  RadicalUncertified,
  NotGraded,
  NotPositivelyGraded,
  NotIrrelevantPrimary,
  MissingBound,
  ConsistencyFailure,
  NotStarArtinian,
  NoNonzerodivisorFound,
  ContainmentFailure,
  CapExceeded,
  InvalidArgument,
  NotMonomial,
  TheoremContradiction,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Errors that represent a computation outside the certified scope rather than
/// a bug or a bad input. The CLI maps these to exit code 2.
bool is_scope_refusal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::Parse, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gradix
