#include "stsdisc/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "stsdisc/cut_colouring.hpp"
#include "stsdisc/discrepancy.hpp"
#include "stsdisc/errors.hpp"
#include "stsdisc/rng.hpp"

namespace stsdisc {

namespace {

void validate_config(const AnnealConfig& cfg) {
    if (cfg.r < 2) throw DomainError("annealing needs r >= 2");
    if (cfg.restarts < 1) throw DomainError("restarts must be positive");
    if (cfg.steps_per_restart < 0) throw DomainError("steps_per_restart must be non-negative");
    if (cfg.labellings < 1) throw DomainError("labellings must be positive");
    if (!(cfg.t_initial > 0.0)) throw DomainError("t_initial must be positive");
    if (!(cfg.cooling > 0.0 && cfg.cooling < 1.0)) throw DomainError("cooling must lie in (0,1)");
}

// One restart's incremental state: per-system colour counts, the numerator
// histogram over systems, and a lazily walked maximum pointer.
struct SaState {
    int r;
    std::int32_t m;
    std::size_t nsys;
    std::vector<std::int32_t> counts;  // nsys * r
    std::vector<std::int32_t> cnt_at;  // histogram of per-system numerators
    std::vector<std::int32_t> num_of;  // per-system numerator
    std::int32_t top = 0;

    std::int32_t system_numerator(std::size_t s) const {
        std::int32_t worst = 0;
        for (int c = 0; c < r; ++c) {
            worst = std::max(worst,
                             static_cast<std::int32_t>(std::abs(r * counts[s * static_cast<std::size_t>(r) + static_cast<std::size_t>(c)] - m)));
        }
        return worst;
    }

    void rebuild(const std::vector<std::uint8_t>& colours, const LabelledFamily& family) {
        std::fill(counts.begin(), counts.end(), 0);
        std::fill(cnt_at.begin(), cnt_at.end(), 0);
        for (std::size_t s = 0; s < nsys; ++s) {
            for (std::int64_t rank : family.systems[s].blocks()) {
                ++counts[s * static_cast<std::size_t>(r) + colours[static_cast<std::size_t>(rank)]];
            }
        }
        top = 0;
        for (std::size_t s = 0; s < nsys; ++s) {
            num_of[s] = system_numerator(s);
            ++cnt_at[static_cast<std::size_t>(num_of[s])];
            top = std::max(top, num_of[s]);
        }
    }

    // moves one block of each affected system between colour classes and
    // returns the resulting objective numerator
    std::int32_t shift(const std::vector<std::int32_t>& affected, int from, int to) {
        for (std::int32_t s : affected) {
            auto us = static_cast<std::size_t>(s);
            --counts[us * static_cast<std::size_t>(r) + static_cast<std::size_t>(from)];
            ++counts[us * static_cast<std::size_t>(r) + static_cast<std::size_t>(to)];
            --cnt_at[static_cast<std::size_t>(num_of[us])];
            num_of[us] = system_numerator(us);
            ++cnt_at[static_cast<std::size_t>(num_of[us])];
            top = std::max(top, num_of[us]);
        }
        while (top > 0 && cnt_at[static_cast<std::size_t>(top)] == 0) --top;
        return top;
    }
};

}  // namespace

AnnealConfig default_anneal_config(const Order& order, int r) {
    if (r < 2) throw DomainError("annealing needs r >= 2");
    AnnealConfig cfg;
    cfg.r = r;
    cfg.steps_per_restart = 20 * order.triple_count();
    cfg.t_initial = static_cast<double>(order.block_count()) / 4.0;
    return cfg;
}

ScaledDiscrepancy sa_objective(const Colouring& chi, const LabelledFamily& family) {
    return max_disc_over_systems(family.systems, chi);
}

SearchOutcome sa_minimise(const Order& order, const LabelledFamily& family,
                          const AnnealConfig& cfg) {
    validate_config(cfg);
    if (family.systems.empty()) throw EmptyDomainError("annealing over an empty family");
    if (family.order != order) {
        throw DimensionMismatchError("family order " + std::to_string(family.order.n()) +
                                     " vs requested order " + std::to_string(order.n()));
    }

    const auto t = static_cast<std::size_t>(order.triple_count());
    const auto m = static_cast<std::int32_t>(order.block_count());
    const int r = cfg.r;
    auto systems_of = membership_index(order, family);

    SaState state;
    state.r = r;
    state.m = m;
    state.nsys = family.systems.size();
    state.counts.assign(state.nsys * static_cast<std::size_t>(r), 0);
    state.cnt_at.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(r - 1) + 1, 0);
    state.num_of.assign(state.nsys, 0);

    std::int32_t best_num = -1;
    std::vector<std::uint8_t> best_colours;
    std::vector<std::uint8_t> colours(t);
    std::int64_t moves = 0;

    for (std::int64_t restart = 0; restart < cfg.restarts; ++restart) {
        Rng rng(derive_seed(cfg.seed, SeedStream::kStreamSaRestart,
                            static_cast<std::uint64_t>(restart)));
        for (std::size_t i = 0; i < t; ++i) {
            colours[i] = static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(r)));
        }
        state.rebuild(colours, family);

        std::int32_t cur = state.top;
        std::int32_t restart_best = cur;
        std::vector<std::uint8_t> restart_colours = colours;

        double temp = cfg.t_initial;
        for (std::int64_t step = 0; step < cfg.steps_per_restart; ++step) {
            ++moves;
            auto rank = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(t)));
            int from = colours[rank];
            int to = (from + 1 +
                      static_cast<int>(rng.below(static_cast<std::uint64_t>(r - 1)))) % r;

            std::int32_t proposed = state.shift(systems_of[rank], from, to);
            bool accept = proposed <= cur;
            if (!accept) {
                accept = rng.real01() <
                         std::exp(-static_cast<double>(proposed - cur) / temp);
            }
            if (accept) {
                colours[rank] = static_cast<std::uint8_t>(to);
                cur = proposed;
                if (cur < restart_best) {
                    restart_best = cur;
                    restart_colours = colours;
                }
            } else {
                state.shift(systems_of[rank], to, from);
            }
            temp *= cfg.cooling;
        }

        if (best_num < 0 || restart_best < best_num) {
            best_num = restart_best;
            best_colours = std::move(restart_colours);
        }
    }

    return SearchOutcome{ScaledDiscrepancy(best_num, r),
                         Colouring(order, r, std::move(best_colours)),
                         false,
                         moves,
                         false,
                         {}};
}

std::vector<SaRow> sa_table_r3(const std::vector<int>& orders, const AnnealConfig& cfg) {
    std::vector<SaRow> rows;
    rows.reserve(orders.size());
    for (int n : orders) {
        Order order(n);
        AnnealConfig run = cfg;
        run.r = 3;
        // zeroed step and temperature fields resolve to per-order defaults,
        // since 20*C(n,3) and m/4 change with the order
        AnnealConfig defaults = default_anneal_config(order, 3);
        if (run.steps_per_restart == 0) run.steps_per_restart = defaults.steps_per_restart;
        if (run.t_initial <= 0.0) run.t_initial = defaults.t_initial;
        LabelledFamily family =
            n <= 9 ? enumerate_all_labelled(order)
                   : sample_labellings(canonical_system(order), run.labellings,
                                       derive_seed(run.seed, SeedStream::kStreamSaFamily,
                                                   static_cast<std::uint64_t>(n)));
        SearchOutcome outcome = sa_minimise(order, family, run);
        rows.push_back(SaRow{n, order.block_count(), conjectured_delta2(order).value,
                             outcome.best_value,
                             outcome.best_value.value() / static_cast<double>(n)});
    }
    return rows;
}

}  // namespace stsdisc
