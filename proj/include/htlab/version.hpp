#pragma once

namespace htlab {
inline constexpr const char* kVersion = "0.1.0";
}
