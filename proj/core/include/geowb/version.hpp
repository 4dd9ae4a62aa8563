#pragma once

namespace geowb {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace geowb
