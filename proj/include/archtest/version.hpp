#pragma once

namespace archtest {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace archtest
