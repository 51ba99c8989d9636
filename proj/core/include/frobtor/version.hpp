#pragma once

namespace frobtor {

inline constexpr const char* kToolName = "frobtor";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace frobtor
