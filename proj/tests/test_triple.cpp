#include <doctest.h>

#include <vector>

#include "stsdisc/errors.hpp"
#include "stsdisc/order.hpp"
#include "stsdisc/triple.hpp"

using namespace stsdisc;

TEST_CASE("pair rank matches colex enumeration") {
    // oracle: pairs ordered by (v, u)
    std::int64_t expected = 0;
    for (int v = 1; v < 25; ++v) {
        for (int u = 0; u < v; ++u) {
            CHECK(pair_rank(u, v) == expected);
            ++expected;
        }
    }
}

TEST_CASE("triple rank matches colex enumeration") {
    // oracle: triples ordered by (c, b, a)
    for (int n : {7, 9, 13}) {
        Order order(n);
        std::int64_t expected = 0;
        for (int c = 2; c < n; ++c) {
            for (int b = 1; b < c; ++b) {
                for (int a = 0; a < b; ++a) {
                    Triple ranked = rank_triple(a, b, c, order);
                    CHECK(ranked.rank == expected);
                    Triple unranked = unrank_triple(expected, order);
                    CHECK(unranked.a == a);
                    CHECK(unranked.b == b);
                    CHECK(unranked.c == c);
                    ++expected;
                }
            }
        }
        CHECK(expected == order.triple_count());
    }
}

TEST_CASE("rank and unrank are mutually inverse at larger orders") {
    for (int n : {15, 19, 21, 25, 27}) {
        Order order(n);
        for (std::int64_t rank = 0; rank < order.triple_count(); ++rank) {
            Triple t = unrank_triple(rank, order);
            CHECK(t.a < t.b);
            CHECK(t.b < t.c);
            CHECK(t.c < n);
            CHECK(rank_triple(t.a, t.b, t.c, order).rank == rank);
        }
    }
}

TEST_CASE("invalid triples are rejected") {
    Order order(7);
    CHECK_THROWS_AS(rank_triple(1, 1, 2, order), InvalidTripleError);
    CHECK_THROWS_AS(rank_triple(2, 1, 3, order), InvalidTripleError);
    CHECK_THROWS_AS(rank_triple(-1, 1, 2, order), InvalidTripleError);
    CHECK_THROWS_AS(rank_triple(0, 1, 7, order), InvalidTripleError);
    CHECK_THROWS_AS(unrank_triple(-1, order), InvalidTripleError);
    CHECK_THROWS_AS(unrank_triple(order.triple_count(), order), InvalidTripleError);
}

TEST_CASE("order admissibility") {
    for (int n : {3, 7, 9, 13, 15, 19, 21, 25, 27, 31, 33}) CHECK_NOTHROW((Order(n)));
    for (int n : {0, 1, 2, 4, 5, 6, 8, 10, 11, 12, 14, 17, 23}) {
        CHECK_THROWS_AS((Order(n)), FeasibilityError);
    }
    Order seven(7);
    CHECK(seven.block_count() == 7);
    CHECK(seven.triple_count() == 35);
    CHECK(seven.pair_count() == 21);
    Order nine(9);
    CHECK(nine.block_count() == 12);
    CHECK(nine.triple_count() == 84);
}
