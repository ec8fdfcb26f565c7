#pragma once

namespace slabtrans {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace slabtrans
