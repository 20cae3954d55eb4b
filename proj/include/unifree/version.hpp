#pragma once

namespace unifree {

inline constexpr const char* kToolName = "unifree";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace unifree
