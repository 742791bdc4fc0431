#pragma once

namespace multiwell {

inline constexpr const char* k_version = "0.1.0";
inline constexpr const char* k_tool_name = "multiwell";

}  // namespace multiwell
