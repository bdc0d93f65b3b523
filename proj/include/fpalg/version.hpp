#pragma once

namespace fpalg {

inline constexpr const char* kToolName = "fpalg";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace fpalg
