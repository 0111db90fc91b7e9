#pragma once

namespace nrkh {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nrkh
