#pragma once

#include <string_view>

namespace endsum {

inline constexpr std::string_view kToolName = "endsum";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace endsum
