#include "stsdisc/steiner_system.hpp"

#include <algorithm>
#include <string>

#include "stsdisc/errors.hpp"
#include "stsdisc/triple.hpp"

namespace stsdisc {

SteinerSystem::SteinerSystem(const Order& order, std::vector<std::int64_t> block_ranks)
    : order_(order), blocks_(std::move(block_ranks)), mask_(order.triple_count()) {
    const std::int64_t m = order_.block_count();
    if (static_cast<std::int64_t>(blocks_.size()) != m) {
        throw InvalidSystemError("system of order " + std::to_string(order_.n()) + " needs " +
                                 std::to_string(m) + " blocks, got " +
                                 std::to_string(blocks_.size()));
    }
    std::sort(blocks_.begin(), blocks_.end());

    std::vector<std::int8_t> pair_seen(static_cast<std::size_t>(order_.pair_count()), 0);
    std::int64_t prev = -1;
    for (std::int64_t rank : blocks_) {
        if (rank == prev) {
            throw InvalidSystemError("duplicate block rank " + std::to_string(rank));
        }
        prev = rank;
        Triple t = unrank_triple(rank, order_);  // also range-checks
        for (std::int64_t pr : {pair_rank(t.a, t.b), pair_rank(t.a, t.c), pair_rank(t.b, t.c)}) {
            if (pair_seen[static_cast<std::size_t>(pr)]++) {
                throw InvalidSystemError("pair coverage violated: a pair of block {" +
                                         std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                                         std::to_string(t.c) + "} is covered twice");
            }
        }
        mask_.set(rank);
    }
    // 3m = C(n,2), so no-duplicates plus the block count forces full coverage
}

}  // namespace stsdisc
