#pragma once

namespace harmzero {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace harmzero
