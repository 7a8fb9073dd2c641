#pragma once

namespace abelmom {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace abelmom
