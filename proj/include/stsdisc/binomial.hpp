#pragma once

#include <cstdint>

namespace stsdisc {

constexpr std::int64_t binom2(std::int64_t x) {
    return x < 2 ? 0 : x * (x - 1) / 2;
}

constexpr std::int64_t binom3(std::int64_t x) {
    return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6;
}

}  // namespace stsdisc
