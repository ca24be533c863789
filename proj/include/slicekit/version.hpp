#pragma once

namespace slicekit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace slicekit
