#include "knotforge/error.hpp"

namespace knotforge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NearSingular: return "NearSingular";
    case ErrorCode::InvalidSeifertMatrix: return "InvalidSeifertMatrix";
    case ErrorCode::AtJumpPoint: return "AtJumpPoint";
    case ErrorCode::NotGenusOne: return "NotGenusOne";
    case ErrorCode::NotAlgebraicallySlice: return "NotAlgebraicallySlice";
    case ErrorCode::MismatchedClass: return "MismatchedClass";
    case ErrorCode::InconsistentGenus: return "InconsistentGenus";
    case ErrorCode::EmptyRanks: return "EmptyRanks";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::SharedCell: return "SharedCell";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::Internal: return "Internal";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace knotforge
