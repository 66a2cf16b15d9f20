#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace stsdisc {

// Fixed-width bit vector used for triple-universe subsets and pair-coverage maps.
class Bitmask {
  public:
    Bitmask() = default;
    explicit Bitmask(std::int64_t bits)
        : nbits_(bits), words_(static_cast<std::size_t>((bits + 63) / 64), 0) {}

    void set(std::int64_t i) { words_[word(i)] |= bit(i); }
    void reset(std::int64_t i) { words_[word(i)] &= ~bit(i); }
    void flip(std::int64_t i) { words_[word(i)] ^= bit(i); }
    bool test(std::int64_t i) const { return (words_[word(i)] & bit(i)) != 0; }

    std::int64_t size() const { return nbits_; }

    std::int64_t count() const {
        std::int64_t total = 0;
        for (std::uint64_t w : words_) total += std::popcount(w);
        return total;
    }

    // popcount(*this & other); both masks must have equal width
    std::int64_t and_count(const Bitmask& other) const {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            total += std::popcount(words_[i] & other.words_[i]);
        }
        return total;
    }

    friend bool operator==(const Bitmask& a, const Bitmask& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

  private:
    static std::size_t word(std::int64_t i) { return static_cast<std::size_t>(i >> 6); }
    static std::uint64_t bit(std::int64_t i) { return std::uint64_t{1} << (i & 63); }

    std::int64_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace stsdisc
