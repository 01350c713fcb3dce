#pragma once

namespace nikitin {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nikitin
