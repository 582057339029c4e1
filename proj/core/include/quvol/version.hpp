#pragma once

namespace quvol {

inline constexpr const char* kToolName = "quvol";
inline constexpr const char* kVersion = "0.1.0";

} // namespace quvol
