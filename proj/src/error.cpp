#include "quatseq/error.hpp"

namespace quatseq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NoParameters: return "NoParameters";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotInSubring: return "NotInSubring";
    case ErrorCode::OrderUnavailable: return "OrderUnavailable";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotScalar: return "NotScalar";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace quatseq
