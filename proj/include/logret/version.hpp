#pragma once

namespace logret {

inline constexpr const char* kVersion = "logret 0.1.0";

}  // namespace logret
