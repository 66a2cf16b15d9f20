#pragma once

#include <cstdint>

#include "stsdisc/colouring.hpp"
#include "stsdisc/order.hpp"

namespace stsdisc {

// Monte-Carlo summary of max-over-systems discrepancy under uniformly random
// colourings. heuristic_prediction is NaN when labellings < 2, where the
// extreme-value formula is undefined.
struct RandomStatsReport {
    int n;
    int r;
    std::int64_t trials;
    std::int64_t labellings;
    double mean_max_disc;
    double std_error;
    double heuristic_prediction;
    std::uint64_t seed;
};

// Each triple rank independently uniform over [0, r).
Colouring random_colouring(const Order& order, int r, std::uint64_t seed);

// Mean over trials of max_disc_over_systems against one fixed family of
// labellings relabellings drawn from the seed. The mean and standard error
// accumulate by pairwise summation, so the result is independent of any
// partitioning of the trial range.
RandomStatsReport mean_max_disc(const Order& order, int r, std::int64_t trials,
                                std::int64_t labellings, std::uint64_t seed);

// Extreme-value prediction sqrt(m/r) * sqrt(2 ln K) for the mean maximum over
// K near-Gaussian system discrepancies.
double gaussian_heuristic(const Order& order, int r, std::int64_t labellings);

}  // namespace stsdisc
