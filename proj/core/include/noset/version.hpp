#pragma once

namespace noset {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace noset
