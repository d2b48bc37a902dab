#pragma once

namespace ilw {
inline constexpr const char* kVersion = "0.1.0";
}
