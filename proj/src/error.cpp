#include "poslat/error.hpp"

namespace poslat {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Index: return "IndexError";
    case ErrorCode::Cycle: return "CycleError";
    case ErrorCode::Capacity: return "CapacityError";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotADownset: return "NotADownset";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace poslat
