#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "stsdisc/order.hpp"
#include "stsdisc/steiner_system.hpp"

namespace stsdisc {

enum class Provenance { Exhaustive, ConstructedRelabellings };

// A collection of labelled systems of one order. Exhaustive families carry
// every labelled system exactly once; relabelling families may repeat.
struct LabelledFamily {
    Order order;
    std::vector<SteinerSystem> systems;
    Provenance provenance;
};

// Depth-first enumeration of every labelled system, extending the
// lexicographically smallest uncovered pair by its smallest admissible third
// point. Guarded to n in {7, 9}; labelled counts explode beyond that.
LabelledFamily enumerate_all_labelled(const Order& order);

// Bose construction over Z_{2k+1} x {0,1,2} for n = 6k+3.
SteinerSystem construct_bose(const Order& order);

// Skolem-type construction over (Z_{2k} x {0,1,2}) + one point for n = 6k+1,
// built on a half-idempotent commutative quasigroup of order 2k.
SteinerSystem construct_skolem(const Order& order);

// Bose or Skolem depending on the residue of n mod 6.
SteinerSystem canonical_system(const Order& order);

// Image of a system under a permutation of the point set.
SteinerSystem relabel(const SteinerSystem& system, const std::vector<int>& perm);

// K systems from K independent uniformly random permutations; sampling is
// with replacement and per-index seeded, so it is order-independent.
LabelledFamily sample_labellings(const SteinerSystem& system, std::int64_t k, std::uint64_t seed);

// Inverted block index: entry at triple rank i lists the positions in
// family.systems of the systems containing that triple, in ascending order.
std::vector<std::vector<std::int32_t>> membership_index(const Order& order,
                                                        const LabelledFamily& family);

// Text exchange format: header "n=<order>", then one block "a b c" per line.
void write_sts(std::ostream& out, const SteinerSystem& system);
SteinerSystem read_sts(std::istream& in);

}  // namespace stsdisc
