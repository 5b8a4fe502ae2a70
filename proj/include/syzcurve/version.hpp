#pragma once

namespace syzcurve {

inline constexpr const char* engine_name = "syzcurve";
inline constexpr const char* engine_version = "0.1.0";

} // namespace syzcurve
