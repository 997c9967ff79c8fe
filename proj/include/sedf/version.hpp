#pragma once

namespace sedf {

inline constexpr const char* version = "0.1.0";

} // namespace sedf
