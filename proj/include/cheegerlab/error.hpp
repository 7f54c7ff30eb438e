#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cheegerlab {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  IsolatedVertex,
  IndexOutOfRange,
  OverlappingSets,
  DimensionMismatch,
  ZeroFunction,
  ConstantFunction,
  NotConnected,
  TooLarge,
  ConvergenceFailure,
  InvalidParams,
  NonExistent,
  ParityImpossible,
  ResampleLimit,
  ParseError,
  Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for the errors raised while validating graph structure (loops,
/// duplicate edges, isolated vertices, out-of-range indices).
bool is_validation_error(ErrorCode code) noexcept;

/// Single exception type for the library. The message always starts with the
/// error name, e.g. "LoopEdge: vertex 3".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  /// "LoopEdge at line 7: vertex 3" style message for file input.
  static Error at_line(ErrorCode code, std::size_t line, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  struct RawMessage {};
  Error(ErrorCode code, const std::string& message, RawMessage) : std::runtime_error(message), code_(code) {}

  ErrorCode code_;
};

}  // namespace cheegerlab
