#pragma once

namespace claero {

inline constexpr const char* kVersion = "0.1.0";

/// Bumped whenever the checkpoint layout changes; restores refuse mismatches.
inline constexpr const char* kCheckpointFormat = "claero-ckpt-1";

}  // namespace claero
