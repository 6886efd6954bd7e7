#pragma once

namespace cwlin {

inline constexpr const char* kVersion = "0.1.0";

} // namespace cwlin
