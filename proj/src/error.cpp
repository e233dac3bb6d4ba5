#include "rotset/error.hpp"

namespace rotset {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Invalid: return "Invalid";
    case ErrorCode::EmptySystem: return "EmptySystem";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::JunctionInadmissible: return "JunctionInadmissible";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoCycles: return "NoCycles";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::BadDelta: return "BadDelta";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::BadSystem: return "BadSystem";
    case ErrorCode::BadChart: return "BadChart";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotInChart: return "NotInChart";
    case ErrorCode::ItineraryTooShort: return "ItineraryTooShort";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace rotset
