#pragma once

namespace boostlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace boostlab
