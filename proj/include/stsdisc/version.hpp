#pragma once

namespace stsdisc {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace stsdisc
