#pragma once

namespace forge {

inline constexpr const char* kVersion = "0.1.0";

// Bumped whenever any prompt template or output grammar changes; recorded in
// run manifests so emitted corpora can be traced to the exact wording.
inline constexpr const char* kTemplateVersion = "templates-v1";

}  // namespace forge
