#pragma once

namespace bornsim {

inline constexpr const char* version = "0.1.0";

}  // namespace bornsim
