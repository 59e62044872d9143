#pragma once

namespace coordcut {

inline constexpr const char* kLibraryVersion = "1.0.0";
/// Bumped whenever a JSON input or report layout changes.
inline constexpr int kFormatVersion = 1;

}  // namespace coordcut
