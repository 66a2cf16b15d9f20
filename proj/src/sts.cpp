#include "stsdisc/sts.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "stsdisc/errors.hpp"
#include "stsdisc/rng.hpp"
#include "stsdisc/triple.hpp"

namespace stsdisc {

namespace {

constexpr std::int64_t kLabelledCount7 = 30;
constexpr std::int64_t kLabelledCount9 = 840;

struct Enumerator {
    int n;
    std::vector<std::int8_t> covered;            // pair rank -> covered
    std::vector<std::array<int, 3>> blocks;      // current partial system
    std::vector<std::vector<std::int64_t>>* out;
    const Order* order;

    bool smallest_uncovered(int& u, int& v) const {
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (!covered[static_cast<std::size_t>(pair_rank(a, b))]) {
                    u = a;
                    v = b;
                    return true;
                }
            }
        }
        return false;
    }

    void recurse() {
        int u, v;
        if (!smallest_uncovered(u, v)) {
            std::vector<std::int64_t> ranks;
            ranks.reserve(blocks.size());
            for (const auto& blk : blocks) {
                ranks.push_back(rank_triple(blk[0], blk[1], blk[2], *order).rank);
            }
            out->push_back(std::move(ranks));
            return;
        }
        // Every pair below (u,v) is covered, so any admissible third point
        // exceeds v; this yields each labelled system exactly once.
        for (int w = v + 1; w < n; ++w) {
            std::int64_t uw = pair_rank(u, w), vw = pair_rank(v, w);
            if (covered[static_cast<std::size_t>(uw)] || covered[static_cast<std::size_t>(vw)]) {
                continue;
            }
            std::int64_t uv = pair_rank(u, v);
            covered[static_cast<std::size_t>(uv)] = 1;
            covered[static_cast<std::size_t>(uw)] = 1;
            covered[static_cast<std::size_t>(vw)] = 1;
            blocks.push_back({u, v, w});
            recurse();
            blocks.pop_back();
            covered[static_cast<std::size_t>(uv)] = 0;
            covered[static_cast<std::size_t>(uw)] = 0;
            covered[static_cast<std::size_t>(vw)] = 0;
        }
    }
};

}  // namespace

LabelledFamily enumerate_all_labelled(const Order& order) {
    if (order.n() != 7 && order.n() != 9) {
        throw FeasibilityError("exhaustive labelled enumeration is supported for n in {7, 9}; n=" +
                               std::to_string(order.n()) + " is infeasible");
    }
    std::vector<std::vector<std::int64_t>> raw;
    Enumerator e;
    e.n = order.n();
    e.covered.assign(static_cast<std::size_t>(order.pair_count()), 0);
    e.out = &raw;
    e.order = &order;
    e.recurse();

    std::vector<SteinerSystem> systems;
    systems.reserve(raw.size());
    for (auto& ranks : raw) systems.emplace_back(order, std::move(ranks));
    std::sort(systems.begin(), systems.end());

    const std::int64_t expected = order.n() == 7 ? kLabelledCount7 : kLabelledCount9;
    if (static_cast<std::int64_t>(systems.size()) != expected ||
        std::adjacent_find(systems.begin(), systems.end()) != systems.end()) {
        throw Error("labelled enumeration produced " + std::to_string(systems.size()) +
                    " systems at n=" + std::to_string(order.n()) + ", expected " +
                    std::to_string(expected) + " distinct");
    }
    return LabelledFamily{order, std::move(systems), Provenance::Exhaustive};
}

SteinerSystem construct_bose(const Order& order) {
    if (order.n() % 6 != 3) {
        throw ConstructionDomainError("Bose construction needs n = 3 (mod 6), got n=" +
                                      std::to_string(order.n()));
    }
    const int k = (order.n() - 3) / 6;
    const int q = 2 * k + 1;  // odd, so 2 is invertible mod q
    const int half = (q + 1) / 2;
    auto label = [&](int i, int j) { return j * q + i; };

    std::vector<std::int64_t> ranks;
    ranks.reserve(static_cast<std::size_t>(order.block_count()));
    auto add = [&](int p0, int p1, int p2) {
        int v[3] = {p0, p1, p2};
        std::sort(v, v + 3);
        ranks.push_back(rank_triple(v[0], v[1], v[2], order).rank);
    };

    for (int i = 0; i < q; ++i) add(label(i, 0), label(i, 1), label(i, 2));
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < q; ++i) {
            for (int l = i + 1; l < q; ++l) {
                int mid = static_cast<int>((static_cast<std::int64_t>(i + l) * half) % q);
                add(label(i, j), label(l, j), label(mid, (j + 1) % 3));
            }
        }
    }
    return SteinerSystem(order, std::move(ranks));
}

SteinerSystem construct_skolem(const Order& order) {
    if (order.n() % 6 != 1) {
        throw ConstructionDomainError("Skolem construction needs n = 1 (mod 6), got n=" +
                                      std::to_string(order.n()));
    }
    const int k = (order.n() - 1) / 6;
    const int q = 2 * k;
    const int inf = 6 * k;
    auto label = [&](int i, int j) { return j * q + i; };
    // half-idempotent commutative quasigroup on Z_{2k}
    auto star = [&](int x, int y) {
        int s = (x + y) % q;
        return s % 2 == 0 ? s / 2 : k + (s - 1) / 2;
    };

    std::vector<std::int64_t> ranks;
    ranks.reserve(static_cast<std::size_t>(order.block_count()));
    auto add = [&](int p0, int p1, int p2) {
        int v[3] = {p0, p1, p2};
        std::sort(v, v + 3);
        ranks.push_back(rank_triple(v[0], v[1], v[2], order).rank);
    };

    for (int i = 0; i < k; ++i) add(label(i, 0), label(i, 1), label(i, 2));
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < k; ++i) add(inf, label(k + i, j), label(i, (j + 1) % 3));
    }
    for (int j = 0; j < 3; ++j) {
        for (int x = 0; x < q; ++x) {
            for (int y = x + 1; y < q; ++y) {
                add(label(x, j), label(y, j), label(star(x, y), (j + 1) % 3));
            }
        }
    }
    return SteinerSystem(order, std::move(ranks));
}

SteinerSystem canonical_system(const Order& order) {
    return order.n() % 6 == 3 ? construct_bose(order) : construct_skolem(order);
}

SteinerSystem relabel(const SteinerSystem& system, const std::vector<int>& perm) {
    const Order& order = system.order();
    const int n = order.n();
    if (static_cast<int>(perm.size()) != n) {
        throw InvalidPermutationError("permutation has " + std::to_string(perm.size()) +
                                      " entries, expected " + std::to_string(n));
    }
    std::vector<std::int8_t> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]++) {
            throw InvalidPermutationError("not a bijection on [0," + std::to_string(n) + ")");
        }
    }
    std::vector<std::int64_t> ranks;
    ranks.reserve(system.blocks().size());
    for (std::int64_t rank : system.blocks()) {
        Triple t = unrank_triple(rank, order);
        int v[3] = {perm[static_cast<std::size_t>(t.a)], perm[static_cast<std::size_t>(t.b)],
                    perm[static_cast<std::size_t>(t.c)]};
        std::sort(v, v + 3);
        ranks.push_back(rank_triple(v[0], v[1], v[2], order).rank);
    }
    return SteinerSystem(order, std::move(ranks));
}

LabelledFamily sample_labellings(const SteinerSystem& system, std::int64_t k, std::uint64_t seed) {
    if (k < 1) throw DomainError("need at least one labelling sample");
    std::vector<SteinerSystem> systems;
    systems.reserve(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) {
        Rng rng(derive_seed(seed, kStreamPermutation, static_cast<std::uint64_t>(i)));
        systems.push_back(relabel(system, rng.permutation(system.order().n())));
    }
    return LabelledFamily{system.order(), std::move(systems), Provenance::ConstructedRelabellings};
}

std::vector<std::vector<std::int32_t>> membership_index(const Order& order,
                                                        const LabelledFamily& family) {
    std::vector<std::vector<std::int32_t>> systems_of(
        static_cast<std::size_t>(order.triple_count()));
    for (std::size_t s = 0; s < family.systems.size(); ++s) {
        for (std::int64_t rank : family.systems[s].blocks()) {
            systems_of[static_cast<std::size_t>(rank)].push_back(static_cast<std::int32_t>(s));
        }
    }
    return systems_of;
}

void write_sts(std::ostream& out, const SteinerSystem& system) {
    out << "n=" << system.order().n() << "\n";
    for (std::int64_t rank : system.blocks()) {
        Triple t = unrank_triple(rank, system.order());
        out << t.a << " " << t.b << " " << t.c << "\n";
    }
}

SteinerSystem read_sts(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty system file");
    if (line.rfind("n=", 0) != 0) throw ParseError("expected header 'n=<order>', got: " + line);
    int n = 0;
    try {
        n = std::stoi(line.substr(2));
    } catch (const std::exception&) {
        throw ParseError("bad order in header: " + line);
    }
    Order order(n);

    std::vector<std::int64_t> ranks;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        int a, b, c;
        if (!(row >> a >> b >> c)) {
            throw ParseError("line " + std::to_string(lineno) + ": expected 'a b c', got: " + line);
        }
        ranks.push_back(rank_triple(a, b, c, order).rank);
    }
    return SteinerSystem(order, std::move(ranks));
}

}  // namespace stsdisc
