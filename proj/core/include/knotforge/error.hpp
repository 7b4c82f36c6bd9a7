#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotforge {

enum class ErrorCode {
  InvalidArgument,
  Overflow,
  NotHermitian,
  NearSingular,
  InvalidSeifertMatrix,
  AtJumpPoint,
  NotGenusOne,
  NotAlgebraicallySlice,
  MismatchedClass,
  InconsistentGenus,
  EmptyRanks,
  NotAKnot,
  ParityError,
  NotPermutation,
  SharedCell,
  SizeMismatch,
  InvalidGrid,
  TooLarge,
  NotDivisible,
  Internal,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace knotforge
