#include "rrclosure/error.hpp"

namespace rrc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotMPrimary: return "NotMPrimary";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::NotSuperficial: return "NotSuperficial";
    case ErrorCode::ElementNotInIdeal: return "ElementNotInIdeal";
    case ErrorCode::RMaxExceeded: return "RMaxExceeded";
    case ErrorCode::ChainUnstable: return "ChainUnstable";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Internal";
}

}  // namespace rrc
