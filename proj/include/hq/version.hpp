#pragma once

namespace hq {
inline constexpr const char* kToolkitVersion = "1.0.0";
}
