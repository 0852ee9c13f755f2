#pragma once

namespace freytools {

inline constexpr const char* toolkit_version = "0.1.0";
inline constexpr int schema_version = 1;

} // namespace freytools
