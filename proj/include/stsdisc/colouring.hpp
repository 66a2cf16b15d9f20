#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stsdisc/bitmask.hpp"
#include "stsdisc/errors.hpp"
#include "stsdisc/order.hpp"

namespace stsdisc {

// Total r-colouring of the triple universe: one entry per colex rank.
// Immutable after construction; per-colour bitmasks are built eagerly so
// discrepancy evaluation is a popcount reduction.
class Colouring {
  public:
    Colouring(const Order& order, int r, std::vector<std::uint8_t> colours)
        : order_(order), r_(r), colours_(std::move(colours)) {
        if (r < 2) throw DomainError("colouring needs r >= 2");
        if (static_cast<std::int64_t>(colours_.size()) != order.triple_count()) {
            throw DimensionMismatchError("colouring has " + std::to_string(colours_.size()) +
                                         " entries, universe has " +
                                         std::to_string(order.triple_count()));
        }
        masks_.assign(static_cast<std::size_t>(r), Bitmask(order.triple_count()));
        for (std::size_t i = 0; i < colours_.size(); ++i) {
            if (colours_[i] >= r_) {
                throw DomainError("colour " + std::to_string(colours_[i]) + " out of range [0," +
                                  std::to_string(r_) + ")");
            }
            masks_[colours_[i]].set(static_cast<std::int64_t>(i));
        }
    }

    const Order& order() const { return order_; }
    int r() const { return r_; }
    std::uint8_t colour(std::int64_t rank) const {
        return colours_[static_cast<std::size_t>(rank)];
    }
    const std::vector<std::uint8_t>& colours() const { return colours_; }
    const Bitmask& colour_mask(int c) const { return masks_[static_cast<std::size_t>(c)]; }

    friend bool operator==(const Colouring& a, const Colouring& b) {
        return a.order_ == b.order_ && a.r_ == b.r_ && a.colours_ == b.colours_;
    }

  private:
    Order order_;
    int r_;
    std::vector<std::uint8_t> colours_;
    std::vector<Bitmask> masks_;
};

}  // namespace stsdisc
