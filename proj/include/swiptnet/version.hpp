#pragma once

namespace swipt {
inline constexpr const char* kVersion = "1.0.0";
}
