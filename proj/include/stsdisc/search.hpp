#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "stsdisc/colouring.hpp"
#include "stsdisc/order.hpp"
#include "stsdisc/scaled_disc.hpp"
#include "stsdisc/sts.hpp"

namespace stsdisc {

// Result of an exact or heuristic minimisation. proved_optimal is set only
// when the best value carries a certificate (lower bound met or the search
// space was exhausted); it is never set on a budget-exhausted run.
struct SearchOutcome {
    ScaledDiscrepancy best_value;
    std::optional<Colouring> witness;
    bool proved_optimal = false;
    std::int64_t nodes_explored = 0;
    bool budget_exhausted = false;
    // DFS path at the moment the budget ran out, for checkpointing
    std::vector<std::pair<std::int64_t, int>> decided_prefix;
};

// Exact minimum over integer colour-count vectors (c_1..c_r) summing to the
// block count of max_i |r*c_i - m| / r. Lower-bounds every colouring's
// discrepancy on every system. For r=2: 0 if m is even, 1/2 if odd.
ScaledDiscrepancy parity_lower_bound(const Order& order, int r);

// Branch-and-bound over all 2-colourings of the triple universe, minimising
// the maximum discrepancy over the family. The incumbent starts from the best
// cut colouring; the search certifies optimality early when the incumbent
// meets parity_lower_bound.
SearchOutcome exact_min_disc(const Order& order, const LabelledFamily& family,
                             std::int64_t budget);

enum class ZeroDiscVerdict { Infeasible, FeasibleWithWitness, Unknown };

struct ZeroDiscResult {
    ZeroDiscVerdict verdict;
    std::optional<Colouring> witness;
    std::int64_t nodes_explored = 0;
    bool budget_exhausted = false;
    std::vector<std::pair<std::int64_t, int>> decided_prefix;
};

// Decides whether some 2-colouring gives every system in the family exactly
// m/2 blocks of each colour, by DFS over exactly-m/2-of-m cardinality
// constraints with unit propagation. Unknown on budget exhaustion.
ZeroDiscResult decide_zero_disc(const Order& order, const LabelledFamily& family,
                                std::int64_t budget);

// Distribution of max_disc_over_systems over all C(t,2) two-triple flips of a
// base 2-colouring. Counts are keyed by discrepancy numerator.
struct BasinHistogram {
    ScaledDiscrepancy base_disc;
    int den;
    std::map<std::int64_t, std::int64_t> counts;

    std::int64_t total() const {
        std::int64_t sum = 0;
        for (const auto& [num, count] : counts) sum += count;
        return sum;
    }
};

BasinHistogram two_flip_basin(const Order& order, const Colouring& base,
                              const LabelledFamily& family);

// Fraction of perturbations that keep the base discrepancy.
double basin_fraction_optimal(const BasinHistogram& hist);

// Interrupted-search checkpoint, persisted as a versioned JSON object.
struct SearchCheckpoint {
    int n;
    std::vector<std::pair<std::int64_t, int>> decided_prefix;
    ScaledDiscrepancy incumbent;
    std::optional<std::vector<std::uint8_t>> witness;
    std::int64_t nodes;
};

void write_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& checkpoint);
SearchCheckpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace stsdisc
