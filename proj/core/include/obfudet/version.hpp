#pragma once

namespace obfudet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace obfudet
