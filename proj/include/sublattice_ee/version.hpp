#pragma once

namespace sublattice {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sublattice
