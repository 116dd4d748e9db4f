#pragma once

namespace uqmn {

inline constexpr const char* kVersion = "1.0.0";

} // namespace uqmn
