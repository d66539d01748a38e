#pragma once

namespace eegdur {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace eegdur
