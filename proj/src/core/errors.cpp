#include "core/errors.hpp"

namespace nonrep {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MultiEdgeOrLoop: return "MultiEdgeOrLoop";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::PolesNotOnExternalFace: return "PolesNotOnExternalFace";
    case ErrorCode::InsufficientColors: return "InsufficientColors";
    case ErrorCode::ResampleBudgetExceeded: return "ResampleBudgetExceeded";
    case ErrorCode::GuaranteedModeInfeasible: return "GuaranteedModeInfeasible";
    case ErrorCode::NotFacial: return "NotFacial";
    case ErrorCode::NonPlanarClass: return "NonPlanarClass";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace nonrep
