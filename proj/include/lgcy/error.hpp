#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lgcy {

enum class ErrorCode {
  InvalidArgument,
  NotQuasiHomogeneous,
  UnderdeterminedWeights,
  NotIsolated,
  OracleMismatch,
  DegenerateSocle,
  FrameDegeneration,
  NondegenerationLost,
  DimensionMismatch,
  RankDeficient,
  ToleranceNotMet,
  SyntaxError,
  UnknownVariable,
};

std::string_view to_string(ErrorCode code);

// Domain error carrying a machine-readable code. The CLI maps these to
// structured JSON error objects and exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  // Input offset for parse errors.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace lgcy
