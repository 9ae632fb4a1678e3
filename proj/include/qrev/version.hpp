#pragma once

namespace qrev {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kRngName = "mt19937_64";

}  // namespace qrev
