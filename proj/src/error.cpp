#include "cheegerlab/error.hpp"

namespace cheegerlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::ConstantFunction: return "ConstantFunction";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NonExistent: return "NonExistent";
    case ErrorCode::ParityImpossible: return "ParityImpossible";
    case ErrorCode::ResampleLimit: return "ResampleLimit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::IsolatedVertex:
    case ErrorCode::IndexOutOfRange:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

Error Error::at_line(ErrorCode code, std::size_t line, const std::string& detail) {
  return Error(code, std::string(to_string(code)) + " at line " + std::to_string(line) + ": " + detail, RawMessage{});
}

}  // namespace cheegerlab
