#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "stsdisc/discrepancy.hpp"
#include "stsdisc/errors.hpp"
#include "stsdisc/rng.hpp"
#include "stsdisc/sts.hpp"

using namespace stsdisc;

namespace {

// oracle: per-colour block counts by direct iteration, no bitmasks
ScaledDiscrepancy disc_by_counting(const SteinerSystem& system, const Colouring& chi) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(chi.r()), 0);
    for (std::int64_t rank : system.blocks()) ++counts[chi.colour(rank)];
    std::int64_t worst = 0;
    for (std::int64_t c : counts) {
        worst = std::max<std::int64_t>(worst, std::llabs(chi.r() * c - system.order().block_count()));
    }
    return {worst, chi.r()};
}

Colouring random_chi(const Order& order, int r, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> colours(static_cast<std::size_t>(order.triple_count()));
    for (auto& c : colours) c = static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(r)));
    return {order, r, colours};
}

}  // namespace

TEST_CASE("discrepancy agrees with direct counting") {
    for (int n : {7, 9}) {
        Order order(n);
        LabelledFamily family = enumerate_all_labelled(order);
        for (int r : {2, 3, 4}) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                Colouring chi = random_chi(order, r, 1000 * static_cast<std::uint64_t>(n) + seed);
                ScaledDiscrepancy worst(0, r);
                for (const SteinerSystem& system : family.systems) {
                    ScaledDiscrepancy direct = disc_by_counting(system, chi);
                    CHECK(disc_on_system(system, chi) == direct);
                    if (worst < direct) worst = direct;
                }
                CHECK(max_disc_over_systems(family.systems, chi) == worst);
            }
        }
    }
}

TEST_CASE("single colour class is the worst colouring") {
    for (int n : {7, 9, 13}) {
        Order order(n);
        SteinerSystem system = canonical_system(order);
        for (int r : {2, 3, 4}) {
            Colouring chi(order, r,
                          std::vector<std::uint8_t>(static_cast<std::size_t>(order.triple_count()), 0));
            // colour 0 holds all m blocks: max(|r*m - m|, m) = m(r-1)
            CHECK(disc_on_system(system, chi) ==
                  ScaledDiscrepancy(order.block_count() * (r - 1), r));
        }
    }
}

TEST_CASE("discrepancy is invariant under renaming colours") {
    Order order(9);
    SteinerSystem system = canonical_system(order);
    Colouring chi = random_chi(order, 3, 7);
    std::vector<std::uint8_t> swapped(chi.colours());
    for (auto& c : swapped) c = static_cast<std::uint8_t>((c + 1) % 3);
    CHECK(disc_on_system(system, chi) == disc_on_system(system, Colouring(order, 3, swapped)));
}

TEST_CASE("colouring construction is validated") {
    Order order(7);
    CHECK_THROWS_AS(Colouring(order, 1, std::vector<std::uint8_t>(35, 0)), DomainError);
    CHECK_THROWS_AS(Colouring(order, 2, std::vector<std::uint8_t>(34, 0)),
                    DimensionMismatchError);
    CHECK_THROWS_AS(Colouring(order, 2, std::vector<std::uint8_t>(35, 2)), DomainError);
}

TEST_CASE("scaled discrepancy ordering and rendering") {
    CHECK(ScaledDiscrepancy(1, 2) < ScaledDiscrepancy(2, 3));
    CHECK(ScaledDiscrepancy(3, 2) == ScaledDiscrepancy(3, 2));
    CHECK(ScaledDiscrepancy(2, 3) < ScaledDiscrepancy(3, 4));
    CHECK(ScaledDiscrepancy(4, 2).str() == "2.0");
    CHECK(ScaledDiscrepancy(5, 3).str() == "1.67");
    CHECK(ScaledDiscrepancy(0, 4).str() == "0.00");
    CHECK_THROWS_AS(ScaledDiscrepancy(-1, 2), DomainError);
    CHECK_THROWS_AS(ScaledDiscrepancy(1, 0), DomainError);
}
