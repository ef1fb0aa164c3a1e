#pragma once

namespace ramaseries {

inline constexpr const char* kVersion = "1.0.0";

} // namespace ramaseries
