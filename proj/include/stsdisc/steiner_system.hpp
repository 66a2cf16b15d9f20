#pragma once

#include <cstdint>
#include <vector>

#include "stsdisc/bitmask.hpp"
#include "stsdisc/order.hpp"

namespace stsdisc {

// A labelled Steiner triple system: n(n-1)/6 triples covering every pair of
// [0,n) exactly once. The constructor validates pair coverage; blocks are kept
// sorted by rank and mirrored in a bitmask over the triple universe.
class SteinerSystem {
  public:
    SteinerSystem(const Order& order, std::vector<std::int64_t> block_ranks);

    const Order& order() const { return order_; }
    const std::vector<std::int64_t>& blocks() const { return blocks_; }
    const Bitmask& mask() const { return mask_; }
    bool contains(std::int64_t rank) const { return mask_.test(rank); }

    friend bool operator==(const SteinerSystem& a, const SteinerSystem& b) {
        return a.order_ == b.order_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(const SteinerSystem& a, const SteinerSystem& b) {
        return a.blocks_ < b.blocks_;
    }

  private:
    Order order_;
    std::vector<std::int64_t> blocks_;
    Bitmask mask_;
};

}  // namespace stsdisc
