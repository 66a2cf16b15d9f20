#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace stsdisc {

// Streams keep seeds derived for different purposes statistically unrelated.
enum SeedStream : std::uint64_t {
    kStreamPermutation = 1,
    kStreamSaRestart = 2,
    kStreamStatsTrial = 3,
    kStreamStatsFamily = 4,
    kStreamSaFamily = 5,
    kStreamColouring = 6,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic per-(stream, index) seed derivation from one master seed, so
// sampling and restarts are order-independent and reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(master ^ splitmix64(stream)) + index);
}

// mt19937_64 wrapper with unbiased bounded draws. Avoids
// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t u64() { return gen_(); }

    // uniform over [0, bound), bound >= 1, rejection sampled
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = gen_();
            if (x >= threshold) return x % bound;
        }
    }

    double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Fisher-Yates shuffle of [0, n)
    std::vector<int> permutation(int n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
            std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
        }
        return p;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace stsdisc
