#pragma once

#include <stdexcept>
#include <string>

namespace nonrep {

enum class ErrorCode {
  InvalidArgument,
  InvalidSize,
  Parse,
  NotPlanar,
  Disconnected,
  MultiEdgeOrLoop,
  NotTwoConnected,
  PolesNotOnExternalFace,
  InsufficientColors,
  ResampleBudgetExceeded,
  GuaranteedModeInfeasible,
  NotFacial,
  NonPlanarClass,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Internal consistency check that survives NDEBUG builds.
inline void ensure(bool cond, const char* what) {
  if (!cond) fail(ErrorCode::Internal, what);
}

}  // namespace nonrep
