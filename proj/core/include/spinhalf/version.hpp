#pragma once

namespace spinhalf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spinhalf
