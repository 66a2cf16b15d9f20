#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <vector>

#include "stsdisc/cut_colouring.hpp"
#include "stsdisc/discrepancy.hpp"
#include "stsdisc/search.hpp"
#include "stsdisc/sts.hpp"

using namespace stsdisc;

namespace {

// oracle: minimise max_i |r*c_i - m| over all count vectors summing to m
std::int64_t parity_by_enumeration(std::int64_t m, int r) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(r), 0);
    std::int64_t best = -1;
    auto recurse = [&](auto&& self, int colour, std::int64_t remaining) -> void {
        if (colour == r - 1) {
            counts[static_cast<std::size_t>(colour)] = remaining;
            std::int64_t worst = 0;
            for (std::int64_t c : counts) {
                worst = std::max<std::int64_t>(worst, std::llabs(r * c - m));
            }
            if (best < 0 || worst < best) best = worst;
            return;
        }
        for (std::int64_t c = 0; c <= remaining; ++c) {
            counts[static_cast<std::size_t>(colour)] = c;
            self(self, colour + 1, remaining - c);
        }
    };
    recurse(recurse, 0, m);
    return best;
}

LabelledFamily single_system_family(const Order& order) {
    return {order, {canonical_system(order)}, Provenance::ConstructedRelabellings};
}

}  // namespace

TEST_CASE("parity lower bound matches count-vector enumeration") {
    for (int n : {7, 9, 13, 15}) {
        Order order(n);
        for (int r : {2, 3, 4, 5}) {
            ScaledDiscrepancy bound = parity_lower_bound(order, r);
            CHECK(bound.num() == parity_by_enumeration(order.block_count(), r));
            CHECK(bound.den() == r);
        }
    }

    SUBCASE("reference values") {
        CHECK(parity_lower_bound(Order(7), 2) == ScaledDiscrepancy(1, 2));
        CHECK(parity_lower_bound(Order(9), 2) == ScaledDiscrepancy(0, 2));
        // m = 7 leaves residue 1 mod 3; the short colour is 2 blocks under m/3
        CHECK(parity_lower_bound(Order(7), 3) == ScaledDiscrepancy(2, 3));
        CHECK(parity_lower_bound(Order(9), 3) == ScaledDiscrepancy(0, 3));
        CHECK(parity_lower_bound(Order(13), 3) == ScaledDiscrepancy(2, 3));
    }
}

TEST_CASE("exact search certifies the order-7 minimum") {
    Order order(7);
    SearchOutcome outcome = exact_min_disc(order, enumerate_all_labelled(order), 1000000000);
    CHECK(outcome.best_value == ScaledDiscrepancy(1, 2));
    CHECK(outcome.proved_optimal);
    CHECK_FALSE(outcome.budget_exhausted);
    REQUIRE(outcome.witness.has_value());
    LabelledFamily family = enumerate_all_labelled(order);
    CHECK(max_disc_over_systems(family.systems, *outcome.witness) == ScaledDiscrepancy(1, 2));
}

TEST_CASE("exact search finds a perfectly balanced colouring at order 9") {
    Order order(9);
    LabelledFamily family = enumerate_all_labelled(order);
    SearchOutcome outcome = exact_min_disc(order, family, 1000000000);
    CHECK(outcome.best_value == ScaledDiscrepancy(0, 2));
    CHECK(outcome.proved_optimal);
    REQUIRE(outcome.witness.has_value());
    // every labelled system splits its 12 blocks six and six
    for (const SteinerSystem& system : family.systems) {
        std::int64_t blue = 0;
        for (std::int64_t rank : system.blocks()) blue += outcome.witness->colour(rank);
        CHECK(blue == 6);
    }
}

TEST_CASE("exact search respects its node budget") {
    Order order(9);
    SearchOutcome outcome = exact_min_disc(order, enumerate_all_labelled(order), 50);
    CHECK(outcome.budget_exhausted);
    CHECK_FALSE(outcome.proved_optimal);
    CHECK(outcome.nodes_explored <= 51);
    // the incumbent from the best cut colouring is never worse than 1.0
    CHECK(outcome.best_value <= ScaledDiscrepancy(2, 2));
    CHECK_FALSE(outcome.decided_prefix.empty());
}

TEST_CASE("zero discrepancy decision") {
    SUBCASE("odd block count is infeasible outright") {
        Order order(7);
        ZeroDiscResult result = decide_zero_disc(order, single_system_family(order), 1000);
        CHECK(result.verdict == ZeroDiscVerdict::Infeasible);
        CHECK_FALSE(result.witness.has_value());
    }

    SUBCASE("single system of order 9 is balanceable") {
        Order order(9);
        LabelledFamily family = single_system_family(order);
        ZeroDiscResult result = decide_zero_disc(order, family, 1000000);
        REQUIRE(result.verdict == ZeroDiscVerdict::FeasibleWithWitness);
        REQUIRE(result.witness.has_value());
        std::int64_t blue = 0;
        for (std::int64_t rank : family.systems.front().blocks()) {
            blue += result.witness->colour(rank);
        }
        CHECK(blue == 6);
    }

    SUBCASE("tiny budget reports unknown") {
        Order order(9);
        ZeroDiscResult result = decide_zero_disc(order, enumerate_all_labelled(order), 1);
        CHECK(result.verdict == ZeroDiscVerdict::Unknown);
        CHECK(result.budget_exhausted);
    }
}

TEST_CASE("two-flip census matches flip-by-flip recomputation") {
    Order order(7);
    LabelledFamily family = enumerate_all_labelled(order);
    Colouring base = build_cut_colouring(order, {0});
    BasinHistogram hist = two_flip_basin(order, base, family);

    // oracle: rebuild the colouring for every unordered pair of flips
    std::map<std::int64_t, std::int64_t> expected;
    const std::int64_t t = order.triple_count();
    for (std::int64_t i = 0; i < t; ++i) {
        for (std::int64_t j = i + 1; j < t; ++j) {
            std::vector<std::uint8_t> colours = base.colours();
            colours[static_cast<std::size_t>(i)] ^= 1;
            colours[static_cast<std::size_t>(j)] ^= 1;
            ScaledDiscrepancy disc =
                max_disc_over_systems(family.systems, Colouring(order, 2, colours));
            ++expected[disc.num()];
        }
    }
    CHECK(hist.counts == expected);
    CHECK(hist.total() == t * (t - 1) / 2);
    CHECK(hist.base_disc == max_disc_over_systems(family.systems, base));
    CHECK(hist.den == 2);

    double fraction = basin_fraction_optimal(hist);
    auto kept = hist.counts.find(hist.base_disc.num());
    double expect_fraction =
        kept == hist.counts.end()
            ? 0.0
            : static_cast<double>(kept->second) / static_cast<double>(hist.total());
    CHECK(fraction == doctest::Approx(expect_fraction));
}

TEST_CASE("checkpoints round-trip through disk") {
    std::filesystem::path path =
        std::filesystem::temp_directory_path() / "stsdisc_checkpoint_test.json";
    SearchCheckpoint checkpoint{9,
                                {{0, 1}, {5, 0}, {17, 1}},
                                ScaledDiscrepancy(2, 2),
                                std::vector<std::uint8_t>(84, 0),
                                12345};
    (*checkpoint.witness)[3] = 1;
    write_checkpoint(path, checkpoint);
    SearchCheckpoint loaded = load_checkpoint(path);
    CHECK(loaded.n == checkpoint.n);
    CHECK(loaded.decided_prefix == checkpoint.decided_prefix);
    CHECK(loaded.incumbent == checkpoint.incumbent);
    CHECK(loaded.witness == checkpoint.witness);
    CHECK(loaded.nodes == checkpoint.nodes);
    std::filesystem::remove(path);

    SearchCheckpoint bare{7, {}, ScaledDiscrepancy(1, 2), std::nullopt, 0};
    write_checkpoint(path, bare);
    CHECK_FALSE(load_checkpoint(path).witness.has_value());
    std::filesystem::remove(path);
}
