#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "stsdisc/cut_colouring.hpp"
#include "stsdisc/errors.hpp"
#include "stsdisc/sts.hpp"
#include "stsdisc/triple.hpp"

using namespace stsdisc;

namespace {

std::vector<int> prefix_set(int x) {
    std::vector<int> cut(static_cast<std::size_t>(x));
    for (int i = 0; i < x; ++i) cut[static_cast<std::size_t>(i)] = i;
    return cut;
}

// oracle: a triple is blue iff it meets the cut in one or two points
bool crosses(const Triple& t, const std::vector<int>& cut) {
    int inside = 0;
    for (int p : {t.a, t.b, t.c}) inside += std::count(cut.begin(), cut.end(), p) > 0;
    return inside == 1 || inside == 2;
}

}  // namespace

TEST_CASE("cut colouring marks exactly the crossing triples") {
    for (int n : {7, 9, 13}) {
        Order order(n);
        for (int x = 0; x <= n; ++x) {
            Colouring chi = build_cut_colouring(order, prefix_set(x));
            std::int64_t blue = 0;
            for (std::int64_t rank = 0; rank < order.triple_count(); ++rank) {
                bool expected = crosses(unrank_triple(rank, order), prefix_set(x));
                CHECK(chi.colour(rank) == (expected ? 1 : 0));
                blue += expected;
            }
            // universe-level count: all triples minus the two one-sided classes
            CHECK(blue == binom3(n) - binom3(x) - binom3(n - x));
        }
    }
    // order 7, single point: C(1,1) * C(6,2) crossing triples
    Colouring chi = build_cut_colouring(Order(7), {3});
    CHECK(chi.colour_mask(1).count() == 15);
}

TEST_CASE("cut sets are validated") {
    Order order(7);
    CHECK_THROWS_AS(build_cut_colouring(order, {7}), InvalidSubsetError);
    CHECK_THROWS_AS(build_cut_colouring(order, {-1}), InvalidSubsetError);
    CHECK_NOTHROW(build_cut_colouring(order, {}));
    CHECK_NOTHROW(build_cut_colouring(order, {6, 0, 3}));
    // repeated vertices denote the same set
    CHECK(build_cut_colouring(order, {0, 0}) == build_cut_colouring(order, {0}));
}

TEST_CASE("every system sees the same number of blue blocks") {
    // direct recount against the x(n-x)/2 closed form
    LabelledFamily family = enumerate_all_labelled(Order(7));
    for (const SteinerSystem& system : family.systems) {
        for (int x = 0; x <= 7; ++x) {
            std::vector<int> cut = prefix_set(x);
            std::int64_t blue = 0;
            for (std::int64_t rank : system.blocks()) blue += crosses(unrank_triple(rank, system.order()), cut);
            CHECK(blue == static_cast<std::int64_t>(x) * (7 - x) / 2);
            CHECK(blue_block_count(system, cut) == blue);
            CHECK(verify_blue_count_identity(system, cut));
        }
    }
}

TEST_CASE("closed form discrepancy of a cut colouring") {
    // |x(n-x)/2 - m/2| with m = n(n-1)/6, as twelfths
    for (int n : {7, 9, 13, 15, 19, 21, 31}) {
        Order order(n);
        for (int x = 0; x <= n; ++x) {
            Rational value = closed_form_disc(order, x);
            std::int64_t expected = std::abs(6LL * x * (n - x) - 1LL * n * (n - 1));
            CHECK(value.num * 12 == expected * value.den);
        }
    }
    CHECK(closed_form_disc(Order(7), 1) == Rational(1, 2));
    CHECK(closed_form_disc(Order(7), 0) == Rational(7, 2));
    CHECK(closed_form_disc(Order(9), 2) == Rational(1, 1));
}

TEST_CASE("minimum of the closed form over x") {
    // oracle: scan the numerator |6x(n-x) - n(n-1)| directly
    for (int n : {7, 9, 13, 15, 19, 21, 25, 27, 31}) {
        Order order(n);
        std::int64_t best = -1;
        std::set<int> argmins;
        for (int x = 0; x <= n; ++x) {
            std::int64_t num = std::abs(6LL * x * (n - x) - 1LL * n * (n - 1));
            if (best < 0 || num < best) {
                best = num;
                argmins.clear();
            }
            if (num == best) argmins.insert(x);
        }
        Delta2Result result = conjectured_delta2(order);
        CHECK(result.value.num * 12 == best * result.value.den);
        CHECK(std::set<int>(result.argmins.begin(), result.argmins.end()) == argmins);
        // the argmin set is closed under complementation
        for (int x : result.argmins) CHECK(argmins.count(n - x) == 1);
    }

    SUBCASE("reference values") {
        CHECK(to_scaled_disc(conjectured_delta2(Order(7)).value) == ScaledDiscrepancy(1, 2));
        CHECK(to_scaled_disc(conjectured_delta2(Order(9)).value) == ScaledDiscrepancy(2, 2));
        CHECK(to_scaled_disc(conjectured_delta2(Order(13)).value) == ScaledDiscrepancy(4, 2));
        CHECK(to_scaled_disc(conjectured_delta2(Order(15)).value) == ScaledDiscrepancy(1, 2));
        CHECK(to_scaled_disc(conjectured_delta2(Order(19)).value) == ScaledDiscrepancy(3, 2));
        CHECK(to_scaled_disc(conjectured_delta2(Order(21)).value) == ScaledDiscrepancy(2, 2));
        // n = 13 has two argmin pairs, not one
        CHECK(conjectured_delta2(Order(13)).argmins == std::vector<int>{2, 3, 10, 11});
        // the value keeps growing past the first column block
        CHECK(to_scaled_disc(conjectured_delta2(Order(31)).value) == ScaledDiscrepancy(5, 2));
        CHECK(conjectured_delta2(Order(31)).argmins == std::vector<int>{6, 25});
    }
}
