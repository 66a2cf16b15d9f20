#pragma once

#include <cstdint>
#include <vector>

#include "stsdisc/colouring.hpp"
#include "stsdisc/order.hpp"
#include "stsdisc/rational.hpp"
#include "stsdisc/scaled_disc.hpp"
#include "stsdisc/search.hpp"
#include "stsdisc/sts.hpp"

namespace stsdisc {

// Simulated-annealing parameters. steps_per_restart = 0 is a legal degenerate
// run that evaluates only the initial random colouring of each restart.
struct AnnealConfig {
    int r = 2;
    std::int64_t labellings = 200;  // inner-max family size at orders without enumeration
    std::int64_t restarts = 1000;
    std::int64_t steps_per_restart = 0;
    double t_initial = 1.0;
    double cooling = 0.999;
    std::uint64_t seed = 42;
};

// Reference-scale defaults for one order: 20 moves per triple of the universe
// and an initial temperature of a quarter block on the numerator scale.
AnnealConfig default_anneal_config(const Order& order, int r);

// The annealing objective; identical to max_disc_over_systems, maintained
// incrementally inside sa_minimise.
ScaledDiscrepancy sa_objective(const Colouring& chi, const LabelledFamily& family);

// Restarted annealing over r-colourings of the triple universe. Each restart
// starts from a fresh random colouring and flips one triple per step,
// accepting worsening moves with probability exp(-delta_numerator / T) under
// geometric cooling. Restarts are independently seeded from cfg.seed and
// merge by minimum, so the result does not depend on execution order.
SearchOutcome sa_minimise(const Order& order, const LabelledFamily& family,
                          const AnnealConfig& cfg);

struct SaRow {
    int n;
    std::int64_t blocks;
    Rational delta2_closed_form;
    ScaledDiscrepancy estimate;
    double ratio;  // estimate / n
};

// Three-colour annealing estimates across orders: exhaustive inner families
// at n <= 9, cfg.labellings sampled relabellings of the canonical system
// above that. cfg.steps_per_restart = 0 and cfg.t_initial <= 0 resolve to the
// per-order defaults here, as their natural values change with the order.
std::vector<SaRow> sa_table_r3(const std::vector<int>& orders, const AnnealConfig& cfg);

}  // namespace stsdisc
