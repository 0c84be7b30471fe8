#pragma once

namespace spellbench {

inline constexpr char kVersion[] = "0.1.0";

inline const char* toolkit_version() { return kVersion; }

}  // namespace spellbench
