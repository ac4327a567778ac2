#pragma once

#include <string_view>

namespace quadspin {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace quadspin
