#pragma once

namespace pandora {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pandora
