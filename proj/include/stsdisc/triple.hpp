#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stsdisc/binomial.hpp"
#include "stsdisc/errors.hpp"
#include "stsdisc/order.hpp"

namespace stsdisc {

// A 3-subset {a,b,c} of [0,n) with a < b < c, together with its colex rank.
// The rank C(c,3) + C(b,2) + a is a bijection onto [0, C(n,3)).
struct Triple {
    int a;
    int b;
    int c;
    std::int64_t rank;
};

inline Triple rank_triple(int a, int b, int c, const Order& order) {
    if (!(0 <= a && a < b && b < c && c < order.n())) {
        throw InvalidTripleError("invalid triple (" + std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ") for order " +
                                 std::to_string(order.n()));
    }
    return Triple{a, b, c, binom3(c) + binom2(b) + a};
}

inline Triple unrank_triple(std::int64_t rank, const Order& order) {
    if (rank < 0 || rank >= order.triple_count()) {
        throw InvalidTripleError("triple rank " + std::to_string(rank) + " out of range for order " +
                                 std::to_string(order.n()));
    }
    int c = 2;
    while (binom3(c + 1) <= rank) ++c;
    std::int64_t rem = rank - binom3(c);
    int b = 1;
    while (binom2(b + 1) <= rem) ++b;
    int a = static_cast<int>(rem - binom2(b));
    return Triple{a, b, c, rank};
}

// Colex rank of the pair {u,v} with u < v, a bijection onto [0, C(n,2)).
inline std::int64_t pair_rank(int u, int v) {
    return binom2(v) + u;
}

// All triples of one universe in rank order, for bulk unranking.
class TripleTable {
  public:
    explicit TripleTable(const Order& order) {
        triples_.reserve(static_cast<std::size_t>(order.triple_count()));
        for (int c = 2; c < order.n(); ++c) {
            for (int b = 1; b < c; ++b) {
                for (int a = 0; a < b; ++a) {
                    triples_.push_back(Triple{a, b, c, binom3(c) + binom2(b) + a});
                }
            }
        }
    }

    const Triple& operator[](std::int64_t rank) const {
        return triples_[static_cast<std::size_t>(rank)];
    }
    std::int64_t size() const { return static_cast<std::int64_t>(triples_.size()); }

  private:
    std::vector<Triple> triples_;
};

}  // namespace stsdisc
