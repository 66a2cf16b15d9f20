#pragma once

#include <cstdint>
#include <vector>

#include "stsdisc/colouring.hpp"
#include "stsdisc/order.hpp"
#include "stsdisc/rational.hpp"
#include "stsdisc/steiner_system.hpp"

namespace stsdisc {

// Two-colouring induced by a vertex subset X: a triple is colour 1 ("mixed",
// blue) iff it meets both X and its complement, colour 0 ("pure") otherwise.
struct CutColouring {
    CutColouring(const Order& order, std::vector<int> cut_set);

    Order order;
    std::vector<int> cut_set;  // sorted, duplicate-free

    int x() const { return static_cast<int>(cut_set.size()); }
    Colouring colouring() const;
};

Colouring build_cut_colouring(const Order& order, const std::vector<int>& cut_set);

// |x(n-x)/2 - n(n-1)/12| over denominator 12.
Rational closed_form_disc(const Order& order, std::int64_t x);

struct Delta2Result {
    Rational value;
    std::vector<int> argmins;  // every minimising x, closed under x -> n-x
};

// Minimum of the closed form over integer x in [0, n].
Delta2Result conjectured_delta2(const Order& order);

// Number of blocks of the system coloured 1 by the cut colouring of X.
std::int64_t blue_block_count(const SteinerSystem& system, const std::vector<int>& cut_set);

// Every mixed pair lies in exactly one block and each mixed block covers two
// of them, so the blue count is x(n-x)/2 for every labelled system.
bool verify_blue_count_identity(const SteinerSystem& system, const std::vector<int>& cut_set);

}  // namespace stsdisc
