#pragma once

#include <stdexcept>
#include <string>

namespace rotset {

enum class ErrorCode {
  Parse,
  Invalid,
  EmptySystem,
  Inadmissible,
  JunctionInadmissible,
  CapExceeded,
  NoCycles,
  ZeroDirection,
  BadDelta,
  DepthExceeded,
  BadWindow,
  BadSystem,
  BadChart,
  NonFinite,
  NotInChart,
  ItineraryTooShort,
  Overflow,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rotset
