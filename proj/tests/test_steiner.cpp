#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "stsdisc/errors.hpp"
#include "stsdisc/sts.hpp"
#include "stsdisc/triple.hpp"

using namespace stsdisc;

namespace {

// independent validity oracle: every pair covered exactly once
bool covers_every_pair_once(const SteinerSystem& system) {
    std::vector<int> seen(static_cast<std::size_t>(system.order().pair_count()), 0);
    for (std::int64_t rank : system.blocks()) {
        Triple t = unrank_triple(rank, system.order());
        ++seen[static_cast<std::size_t>(pair_rank(t.a, t.b))];
        ++seen[static_cast<std::size_t>(pair_rank(t.a, t.c))];
        ++seen[static_cast<std::size_t>(pair_rank(t.b, t.c))];
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

}  // namespace

TEST_CASE("system constructor validates pair coverage") {
    Order order(7);
    std::vector<std::int64_t> fano;
    for (auto [a, b, c] : {std::array{0, 1, 2}, std::array{0, 3, 4}, std::array{0, 5, 6},
                           std::array{1, 3, 5}, std::array{1, 4, 6}, std::array{2, 3, 6},
                           std::array{2, 4, 5}}) {
        fano.push_back(rank_triple(a, b, c, order).rank);
    }
    CHECK_NOTHROW(SteinerSystem(order, fano));

    std::vector<std::int64_t> short_one(fano.begin(), fano.end() - 1);
    CHECK_THROWS_AS(SteinerSystem(order, short_one), InvalidSystemError);

    std::vector<std::int64_t> duplicated = fano;
    duplicated.back() = duplicated.front();
    CHECK_THROWS_AS(SteinerSystem(order, duplicated), InvalidSystemError);

    std::vector<std::int64_t> clash = fano;
    clash.back() = rank_triple(0, 1, 3, order).rank;  // pair {0,1} covered twice
    CHECK_THROWS_AS(SteinerSystem(order, clash), InvalidSystemError);
}

TEST_CASE("labelled enumeration counts") {
    LabelledFamily seven = enumerate_all_labelled(Order(7));
    CHECK(seven.systems.size() == 30);
    CHECK(seven.provenance == Provenance::Exhaustive);
    LabelledFamily nine = enumerate_all_labelled(Order(9));
    CHECK(nine.systems.size() == 840);

    for (const auto& family : {seven, nine}) {
        std::set<SteinerSystem> distinct(family.systems.begin(), family.systems.end());
        CHECK(distinct.size() == family.systems.size());
        for (const SteinerSystem& system : family.systems) CHECK(covers_every_pair_once(system));
    }

    CHECK_THROWS_AS(enumerate_all_labelled(Order(13)), FeasibilityError);
}

TEST_CASE("labelled systems of order 7 are one relabelling orbit") {
    // oracle: image of one system under all 5040 permutations
    LabelledFamily family = enumerate_all_labelled(Order(7));
    std::set<SteinerSystem> enumerated(family.systems.begin(), family.systems.end());
    SteinerSystem base = canonical_system(Order(7));
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<SteinerSystem> orbit;
    do {
        orbit.insert(relabel(base, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(orbit.size() == 30);
    CHECK(orbit == enumerated);
}

TEST_CASE("constructions cover both residue classes") {
    for (int n : {9, 15, 21, 27, 33}) CHECK(covers_every_pair_once(construct_bose(Order(n))));
    for (int n : {7, 13, 19, 25, 31}) CHECK(covers_every_pair_once(construct_skolem(Order(n))));
    CHECK_THROWS_AS(construct_bose(Order(7)), ConstructionDomainError);
    CHECK_THROWS_AS(construct_skolem(Order(9)), ConstructionDomainError);
    for (int n : {7, 9, 13, 15, 19, 21, 25, 27}) {
        CHECK(covers_every_pair_once(canonical_system(Order(n))));
    }
}

TEST_CASE("relabelling is an action of the symmetric group") {
    SteinerSystem base = canonical_system(Order(13));
    std::vector<int> identity(13);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(relabel(base, identity) == base);

    std::vector<int> perm = {5, 2, 9, 0, 12, 3, 7, 1, 11, 4, 10, 8, 6};
    std::vector<int> inverse(13);
    for (int i = 0; i < 13; ++i) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    CHECK(relabel(relabel(base, perm), inverse) == base);
    CHECK(covers_every_pair_once(relabel(base, perm)));

    CHECK_THROWS_AS(relabel(base, identity = std::vector<int>(12)), InvalidPermutationError);
    CHECK_THROWS_AS(relabel(base, std::vector<int>(13, 0)), InvalidPermutationError);
}

TEST_CASE("labelling samples are per-index seeded") {
    SteinerSystem base = canonical_system(Order(15));
    LabelledFamily five = sample_labellings(base, 5, 99);
    LabelledFamily ten = sample_labellings(base, 10, 99);
    CHECK(five.systems.size() == 5);
    CHECK(ten.systems.size() == 10);
    CHECK(five.provenance == Provenance::ConstructedRelabellings);
    // a shorter run is a prefix of a longer one with the same seed
    for (std::size_t i = 0; i < 5; ++i) CHECK(five.systems[i] == ten.systems[i]);
    for (const SteinerSystem& system : ten.systems) CHECK(covers_every_pair_once(system));
    CHECK_THROWS_AS(sample_labellings(base, 0, 99), DomainError);
}

TEST_CASE("membership index inverts block containment") {
    Order order(9);
    LabelledFamily family = enumerate_all_labelled(order);
    auto index = membership_index(order, family);
    REQUIRE(static_cast<std::int64_t>(index.size()) == order.triple_count());
    std::int64_t entries = 0;
    for (std::int64_t rank = 0; rank < order.triple_count(); ++rank) {
        const auto& holders = index[static_cast<std::size_t>(rank)];
        CHECK(std::is_sorted(holders.begin(), holders.end()));
        for (std::int32_t sys : holders) {
            CHECK(family.systems[static_cast<std::size_t>(sys)].contains(rank));
        }
        entries += static_cast<std::int64_t>(holders.size());
    }
    CHECK(entries == static_cast<std::int64_t>(family.systems.size()) * order.block_count());
}
