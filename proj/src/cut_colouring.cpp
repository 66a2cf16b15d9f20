#include "stsdisc/cut_colouring.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "stsdisc/errors.hpp"
#include "stsdisc/triple.hpp"

namespace stsdisc {

namespace {

std::vector<std::int8_t> membership(const Order& order, const std::vector<int>& cut_set) {
    std::vector<std::int8_t> in_x(static_cast<std::size_t>(order.n()), 0);
    for (int v : cut_set) {
        if (v < 0 || v >= order.n()) {
            throw InvalidSubsetError("cut-set vertex " + std::to_string(v) +
                                     " out of range for order " + std::to_string(order.n()));
        }
        in_x[static_cast<std::size_t>(v)] = 1;
    }
    return in_x;
}

}  // namespace

CutColouring::CutColouring(const Order& ord, std::vector<int> cut) : order(ord), cut_set(std::move(cut)) {
    membership(order, cut_set);  // range validation
    std::sort(cut_set.begin(), cut_set.end());
    cut_set.erase(std::unique(cut_set.begin(), cut_set.end()), cut_set.end());
}

Colouring CutColouring::colouring() const {
    auto in_x = membership(order, cut_set);
    std::vector<std::uint8_t> colours(static_cast<std::size_t>(order.triple_count()), 0);
    TripleTable table(order);
    for (std::int64_t rank = 0; rank < table.size(); ++rank) {
        const Triple& t = table[rank];
        int hits = in_x[static_cast<std::size_t>(t.a)] + in_x[static_cast<std::size_t>(t.b)] +
                   in_x[static_cast<std::size_t>(t.c)];
        if (hits == 1 || hits == 2) colours[static_cast<std::size_t>(rank)] = 1;
    }
    return Colouring(order, 2, std::move(colours));
}

Colouring build_cut_colouring(const Order& order, const std::vector<int>& cut_set) {
    return CutColouring(order, cut_set).colouring();
}

Rational closed_form_disc(const Order& order, std::int64_t x) {
    const std::int64_t n = order.n();
    if (x < 0 || x > n) {
        throw DomainError("cut size " + std::to_string(x) + " out of [0," + std::to_string(n) + "]");
    }
    return Rational(std::abs(6 * x * (n - x) - n * (n - 1)), 12);
}

Delta2Result conjectured_delta2(const Order& order) {
    Rational best = closed_form_disc(order, 0);
    std::vector<int> argmins;
    for (int x = 0; x <= order.n(); ++x) {
        Rational v = closed_form_disc(order, x);
        if (v < best) {
            best = v;
            argmins.clear();
        }
        if (v == best) argmins.push_back(x);
    }
    return Delta2Result{best, std::move(argmins)};
}

std::int64_t blue_block_count(const SteinerSystem& system, const std::vector<int>& cut_set) {
    auto in_x = membership(system.order(), cut_set);
    std::int64_t blue = 0;
    for (std::int64_t rank : system.blocks()) {
        Triple t = unrank_triple(rank, system.order());
        int hits = in_x[static_cast<std::size_t>(t.a)] + in_x[static_cast<std::size_t>(t.b)] +
                   in_x[static_cast<std::size_t>(t.c)];
        if (hits == 1 || hits == 2) ++blue;
    }
    return blue;
}

bool verify_blue_count_identity(const SteinerSystem& system, const std::vector<int>& cut_set) {
    std::vector<int> dedup = cut_set;
    std::sort(dedup.begin(), dedup.end());
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    const std::int64_t x = static_cast<std::int64_t>(dedup.size());
    const std::int64_t n = system.order().n();
    return blue_block_count(system, dedup) * 2 == x * (n - x);
}

}  // namespace stsdisc
