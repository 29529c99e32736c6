#pragma once

namespace sweyl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sweyl
