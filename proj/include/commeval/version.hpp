#pragma once

namespace commeval {

inline constexpr const char* version = "0.1.0";

} // namespace commeval
