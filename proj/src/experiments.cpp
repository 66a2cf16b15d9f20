#include "stsdisc/experiments.hpp"

#include <cmath>

#include "stsdisc/cut_colouring.hpp"
#include "stsdisc/discrepancy.hpp"
#include "stsdisc/report.hpp"
#include "stsdisc/rng.hpp"
#include "stsdisc/search.hpp"
#include "stsdisc/stats.hpp"
#include "stsdisc/sts.hpp"

namespace stsdisc {

namespace {

using json = nlohmann::json;

json witness_to_json(const std::optional<Colouring>& witness) {
    if (!witness.has_value()) return nullptr;
    json colours = json::array();
    for (std::int64_t rank = 0; rank < witness->order().triple_count(); ++rank) {
        colours.push_back(witness->colour(rank));
    }
    return colours;
}

const char* verdict_name(ZeroDiscVerdict verdict) {
    switch (verdict) {
        case ZeroDiscVerdict::Infeasible: return "infeasible";
        case ZeroDiscVerdict::FeasibleWithWitness: return "feasible-with-witness";
        case ZeroDiscVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace

json payload_enumerate(const std::vector<int>& orders) {
    json rows = json::array();
    for (int n : orders) {
        Order order(n);
        rows.push_back({{"n", n},
                        {"count", static_cast<std::int64_t>(
                                      enumerate_all_labelled(order).systems.size())}});
    }
    return json{{"rows", rows}};
}

json payload_delta2(const std::vector<int>& orders) {
    json rows = json::array();
    for (int n : orders) {
        Order order(n);
        Delta2Result delta2 = conjectured_delta2(order);
        rows.push_back({{"n", n},
                        {"blocks", order.block_count()},
                        {"value", disc_to_json(to_scaled_disc(delta2.value))},
                        {"argmins", delta2.argmins}});
    }
    return json{{"rows", rows}};
}

json payload_exact_search(const std::vector<int>& orders, std::int64_t budget) {
    json rows = json::array();
    for (int n : orders) {
        Order order(n);
        LabelledFamily family = enumerate_all_labelled(order);
        SearchOutcome outcome = exact_min_disc(order, family, budget);
        rows.push_back({{"n", n},
                        {"best", disc_to_json(outcome.best_value)},
                        {"proved_optimal", outcome.proved_optimal},
                        {"nodes", outcome.nodes_explored},
                        {"budget_exhausted", outcome.budget_exhausted},
                        {"witness", witness_to_json(outcome.witness)}});
    }
    return json{{"rows", rows}};
}

json payload_zero_disc(const std::vector<int>& orders, std::int64_t budget) {
    json rows = json::array();
    for (int n : orders) {
        Order order(n);
        LabelledFamily family = enumerate_all_labelled(order);
        ZeroDiscResult result = decide_zero_disc(order, family, budget);
        rows.push_back({{"n", n},
                        {"verdict", verdict_name(result.verdict)},
                        {"nodes", result.nodes_explored},
                        {"budget_exhausted", result.budget_exhausted},
                        {"witness", witness_to_json(result.witness)}});
    }
    return json{{"rows", rows}};
}

json payload_basin(int n) {
    Order order(n);
    LabelledFamily family = enumerate_all_labelled(order);
    const int x = conjectured_delta2(order).argmins.front();
    std::vector<int> cut(static_cast<std::size_t>(x));
    for (int i = 0; i < x; ++i) cut[static_cast<std::size_t>(i)] = i;
    BasinHistogram hist = two_flip_basin(order, build_cut_colouring(order, cut), family);

    json histogram = json::array();
    for (const auto& [num, count] : hist.counts) {
        histogram.push_back(
            {{"value", disc_to_json(ScaledDiscrepancy(num, hist.den))}, {"count", count}});
    }
    return json{{"n", n},
                {"x", x},
                {"base", disc_to_json(hist.base_disc)},
                {"histogram", histogram},
                {"total", hist.total()},
                {"fraction_optimal", basin_fraction_optimal(hist)}};
}

json payload_sa(const std::vector<int>& orders, int r, const AnnealConfig& cfg) {
    json rows = json::array();
    if (r == 3) {
        for (const SaRow& row : sa_table_r3(orders, cfg)) {
            rows.push_back({{"n", row.n},
                            {"blocks", row.blocks},
                            {"delta2", disc_to_json(to_scaled_disc(row.delta2_closed_form))},
                            {"estimate", disc_to_json(row.estimate)},
                            {"ratio", row.ratio},
                            {"parity", disc_to_json(parity_lower_bound(Order(row.n), 3))}});
        }
        return json{{"r", r}, {"rows", rows}};
    }
    for (int n : orders) {
        Order order(n);
        AnnealConfig run = cfg;
        run.r = r;
        AnnealConfig defaults = default_anneal_config(order, r);
        if (run.steps_per_restart == 0) run.steps_per_restart = defaults.steps_per_restart;
        if (run.t_initial <= 0.0) run.t_initial = defaults.t_initial;
        LabelledFamily family =
            n <= 9 ? enumerate_all_labelled(order)
                   : sample_labellings(canonical_system(order), run.labellings,
                                       derive_seed(run.seed, SeedStream::kStreamSaFamily,
                                                   static_cast<std::uint64_t>(n)));
        SearchOutcome outcome = sa_minimise(order, family, run);
        rows.push_back({{"n", n},
                        {"blocks", order.block_count()},
                        {"delta2", disc_to_json(to_scaled_disc(conjectured_delta2(order).value))},
                        {"estimate", disc_to_json(outcome.best_value)},
                        {"ratio", outcome.best_value.value() / static_cast<double>(n)},
                        {"parity", disc_to_json(parity_lower_bound(order, r))}});
    }
    return json{{"r", r}, {"rows", rows}};
}

json payload_random_stats(const std::vector<int>& orders, const std::vector<int>& rs,
                          std::int64_t trials, std::int64_t labellings, std::uint64_t seed) {
    json rows = json::array();
    for (int n : orders) {
        for (int r : rs) {
            RandomStatsReport report = mean_max_disc(Order(n), r, trials, labellings, seed);
            rows.push_back({{"n", n},
                            {"r", r},
                            {"mean_max_disc", report.mean_max_disc},
                            {"std_error", report.std_error},
                            {"heuristic_prediction",
                             std::isnan(report.heuristic_prediction)
                                 ? json(nullptr)
                                 : json(report.heuristic_prediction)}});
        }
    }
    return json{{"trials", trials}, {"labellings", labellings}, {"rows", rows}};
}

}  // namespace stsdisc
