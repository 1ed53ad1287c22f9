#pragma once

namespace hyperlog {

inline constexpr const char* kVersion = "hyperlog 0.1.0";

}  // namespace hyperlog
