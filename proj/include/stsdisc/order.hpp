#pragma once

#include <cstdint>
#include <string>

#include "stsdisc/binomial.hpp"
#include "stsdisc/errors.hpp"

namespace stsdisc {

// Admissible order of a Steiner triple system. Valid orders satisfy
// n = 1 or 3 (mod 6); everything else is rejected at construction.
class Order {
  public:
    explicit Order(int n) : n_(n) {
        if (n < 3 || (n % 6 != 1 && n % 6 != 3)) {
            throw FeasibilityError("no Steiner triple system of order " + std::to_string(n) +
                                   " exists (need n = 1 or 3 mod 6, n >= 3)");
        }
    }

    int n() const { return n_; }

    // Number of blocks of any system of this order, n(n-1)/6.
    std::int64_t block_count() const { return std::int64_t{1} * n_ * (n_ - 1) / 6; }

    // Size of the triple universe, C(n,3).
    std::int64_t triple_count() const { return binom3(n_); }

    std::int64_t pair_count() const { return binom2(n_); }

    friend bool operator==(const Order& a, const Order& b) { return a.n_ == b.n_; }
    friend bool operator!=(const Order& a, const Order& b) { return a.n_ != b.n_; }

  private:
    int n_;
};

}  // namespace stsdisc
