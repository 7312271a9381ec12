#pragma once

namespace debtflow {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace debtflow
