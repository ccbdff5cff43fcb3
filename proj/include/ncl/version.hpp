#pragma once

namespace ncl {

inline constexpr const char* kVersion = "0.1.0";

}
