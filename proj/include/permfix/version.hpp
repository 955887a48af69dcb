#pragma once

namespace permfix {

inline constexpr const char* kVersionString = "0.1.0";

}  // namespace permfix
