#include "stsdisc/accept.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "stsdisc/anneal.hpp"
#include "stsdisc/cut_colouring.hpp"
#include "stsdisc/discrepancy.hpp"
#include "stsdisc/errors.hpp"
#include "stsdisc/experiments.hpp"
#include "stsdisc/report.hpp"
#include "stsdisc/rng.hpp"
#include "stsdisc/search.hpp"
#include "stsdisc/stats.hpp"
#include "stsdisc/sts.hpp"
#include "stsdisc/triple.hpp"
#include "stsdisc/version.hpp"

namespace stsdisc {

namespace {

const int kOrders[] = {7, 9, 13, 15, 19, 21};

// reference values the tool is expected to reproduce
struct Delta2Ref {
    int n;
    std::int64_t num;  // value over denominator 2
    std::vector<int> argmins;
};
const Delta2Ref kDelta2Table[] = {
    {7, 1, {1, 6}},   {9, 2, {2, 7}},   {13, 4, {2, 11}},
    {15, 1, {3, 12}}, {19, 3, {4, 15}}, {21, 2, {4, 17}},
};

// two-flip histogram at n = 9 around the x = 2 cut colouring, numerator-keyed
const std::map<std::int64_t, std::int64_t> kBasinRef = {{2, 1176}, {4, 1925}, {6, 385}};

// three-colour annealing estimates, numerators over 3
const std::map<int, std::int64_t> kSaR3Ref = {{7, 5},   {9, 9},   {13, 13},
                                              {15, 13}, {19, 15}, {21, 17}};

// mean max discrepancy under random colourings, rows r = 2,3,4
const double kRandomMeansRef[3][6] = {
    {2.78, 4.62, 7.28, 8.51, 11.00, 12.23},
    {3.09, 5.01, 7.62, 8.90, 11.31, 12.50},
    {3.12, 5.00, 7.48, 8.63, 10.97, 12.07},
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

CheckResult check_enumeration_counts(const AcceptOptions&) {
    const auto count7 = payload_enumerate({7}).at("rows")[0].at("count").get<std::int64_t>();
    const auto count9 = payload_enumerate({9}).at("rows")[0].at("count").get<std::int64_t>();
    std::ostringstream detail;
    detail << "enumerate(7)=" << count7 << " enumerate(9)=" << count9;
    return {1, "enumeration-counts", count7 == 30 && count9 == 840, detail.str()};
}

CheckResult check_delta2_table(const AcceptOptions&) {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& ref : kDelta2Table) {
        Order order(ref.n);
        Delta2Result delta2 = conjectured_delta2(order);
        ScaledDiscrepancy value = to_scaled_disc(delta2.value);
        bool value_ok = value == ScaledDiscrepancy(ref.num, 2);
        bool argmins_ok = true;
        for (int x : ref.argmins) {
            argmins_ok = argmins_ok && std::count(delta2.argmins.begin(),
                                                  delta2.argmins.end(), x) == 1;
        }
        // every reported argmin must attain the minimum
        for (int x : delta2.argmins) {
            argmins_ok = argmins_ok && to_scaled_disc(closed_form_disc(order, x)) == value;
        }
        ok = ok && value_ok && argmins_ok;
        detail << "n=" << ref.n << ":" << value.str() << (value_ok && argmins_ok ? "" : "!");
        if (delta2.argmins.size() > ref.argmins.size()) {
            detail << "(+" << delta2.argmins.size() - ref.argmins.size() << " extra argmins)";
        }
        detail << " ";
    }
    return {2, "delta2-closed-form-table", ok, detail.str()};
}

CheckResult check_blue_count_identity(const AcceptOptions& options) {
    bool ok = true;
    std::int64_t checked = 0;
    const std::int64_t relabellings = options.quick ? 20 : 200;
    for (int n : kOrders) {
        Order order(n);
        LabelledFamily family =
            n <= 9 ? enumerate_all_labelled(order)
                   : sample_labellings(canonical_system(order), relabellings,
                                       derive_seed(options.seed, SeedStream::kStreamPermutation,
                                                   static_cast<std::uint64_t>(n)));
        Rng rng(derive_seed(options.seed, SeedStream::kStreamColouring,
                            static_cast<std::uint64_t>(n)));
        for (const SteinerSystem& system : family.systems) {
            for (int x = 0; x <= n; ++x) {
                std::vector<int> prefix(static_cast<std::size_t>(x));
                for (int i = 0; i < x; ++i) prefix[static_cast<std::size_t>(i)] = i;
                auto perm = rng.permutation(n);
                std::vector<int> random_x(perm.begin(), perm.begin() + x);
                const std::int64_t want = static_cast<std::int64_t>(x) * (n - x) / 2;
                ok = ok && blue_block_count(system, prefix) == want &&
                     blue_block_count(system, random_x) == want &&
                     verify_blue_count_identity(system, prefix);
                checked += 2;
            }
        }
    }
    std::ostringstream detail;
    detail << checked << " (system, X) pairs, zero tolerance";
    return {3, "blue-count-identity", ok, detail.str()};
}

CheckResult check_certified_optimum(const AcceptOptions&) {
    Order order(7);
    SearchOutcome outcome = exact_min_disc(order, enumerate_all_labelled(order), 1000000000);
    bool ok = outcome.best_value == ScaledDiscrepancy(1, 2) && outcome.proved_optimal;
    std::ostringstream detail;
    detail << "n=7 best=" << outcome.best_value.str()
           << " proved_optimal=" << (outcome.proved_optimal ? "true" : "false")
           << " nodes=" << outcome.nodes_explored;
    return {4, "certified-optimum-n7", ok, detail.str()};
}

CheckResult check_basin_census(const AcceptOptions&) {
    Order order(9);
    BasinHistogram hist =
        two_flip_basin(order, build_cut_colouring(order, {0, 1}), enumerate_all_labelled(order));
    bool ok = hist.counts == kBasinRef && hist.total() == 3486 &&
              hist.base_disc == ScaledDiscrepancy(2, 2) &&
              basin_fraction_optimal(hist) == 1176.0 / 3486.0;
    std::ostringstream detail;
    for (const auto& [num, count] : hist.counts) {
        detail << ScaledDiscrepancy(num, hist.den).str() << ":" << count << " ";
    }
    detail << "total=" << hist.total();
    return {5, "two-flip-basin-census", ok, detail.str()};
}

CheckResult check_sa_two_colour(const AcceptOptions& options) {
    // quick: 50 restarts instead of 1000, bound widened by +4.0
    const std::int64_t restarts = options.quick ? 50 : 1000;
    const std::int64_t slack_num = options.quick ? 8 : 0;
    bool ok = true;
    std::ostringstream detail;
    for (int n : {13, 15, 19, 21}) {
        Order order(n);
        LabelledFamily family =
            sample_labellings(canonical_system(order), 200,
                              derive_seed(options.seed, SeedStream::kStreamSaFamily,
                                          static_cast<std::uint64_t>(n)));
        AnnealConfig cfg = default_anneal_config(order, 2);
        cfg.restarts = restarts;
        cfg.seed = options.seed;
        SearchOutcome outcome = sa_minimise(order, family, cfg);
        ScaledDiscrepancy target = to_scaled_disc(conjectured_delta2(order).value);
        ScaledDiscrepancy parity = parity_lower_bound(order, 2);
        bool upper = outcome.best_value <= ScaledDiscrepancy(target.num() + slack_num, 2);
        bool lower = !(outcome.best_value < parity);
        ok = ok && upper && lower;
        detail << "n=" << n << ":" << outcome.best_value.str()
               << (upper && lower ? " ok vs " : " misses ") << target.str() << "; ";
    }
    return {6, "sa-two-colour-consistency", ok, detail.str()};
}

CheckResult check_sa_three_colour(const AcceptOptions& options) {
    // quick: 50 restarts instead of 1000, tolerance widened to +-1.0 with the
    // exhaustive-family exact clauses waived
    const std::int64_t restarts = options.quick ? 50 : 1000;
    const std::int64_t tolerance = options.quick ? 3 : 1;
    AnnealConfig cfg;
    cfg.restarts = restarts;
    cfg.steps_per_restart = 0;
    cfg.t_initial = 0.0;
    cfg.seed = options.seed;
    bool ok = true;
    std::ostringstream detail;
    for (const SaRow& row : sa_table_r3({7, 9, 13, 15, 19, 21}, cfg)) {
        const std::int64_t ref = kSaR3Ref.at(row.n);
        bool within = std::llabs(row.estimate.num() - ref) <= tolerance;
        bool exact_ok = options.quick || row.n > 9 || row.estimate.num() == ref;
        ok = ok && within && exact_ok;
        detail << "n=" << row.n << ":" << row.estimate.str()
               << (within && exact_ok ? "~" : "!") << ScaledDiscrepancy(ref, 3).str() << " ";
    }
    return {7, "sa-three-colour-table", ok, detail.str()};
}

CheckResult check_random_stats(const AcceptOptions& options) {
    // quick: 500 trials instead of 5000, relative tolerance 15% instead of 10%
    const std::int64_t trials = options.quick ? 500 : 5000;
    const double tolerance = options.quick ? 0.15 : 0.10;
    bool ok = true;
    double worst = 0.0;
    for (int ri = 0; ri < 3; ++ri) {
        for (int ni = 0; ni < 6; ++ni) {
            RandomStatsReport report =
                mean_max_disc(Order(kOrders[ni]), ri + 2, trials, 200, options.seed);
            const double rel = std::abs(report.mean_max_disc - kRandomMeansRef[ri][ni]) /
                               kRandomMeansRef[ri][ni];
            worst = std::max(worst, rel);
            ok = ok && rel <= tolerance && report.std_error > 0.0 &&
                 std::isfinite(report.std_error);
        }
    }
    std::ostringstream detail;
    detail << "18 entries, worst relative deviation " << fmt(100.0 * worst) << "% (allowed "
           << fmt(100.0 * tolerance) << "%)";
    return {8, "random-colouring-table", ok, detail.str()};
}

bool property_pair_coverage() {
    for (int n : {7, 9, 13, 15, 19, 21, 25, 27}) {
        Order order(n);
        SteinerSystem system = canonical_system(order);
        std::vector<int> seen(static_cast<std::size_t>(binom2(n)), 0);
        for (std::int64_t rank : system.blocks()) {
            Triple t = unrank_triple(rank, order);
            ++seen[static_cast<std::size_t>(pair_rank(t.a, t.b))];
            ++seen[static_cast<std::size_t>(pair_rank(t.a, t.c))];
            ++seen[static_cast<std::size_t>(pair_rank(t.b, t.c))];
        }
        for (int count : seen) {
            if (count != 1) return false;
        }
    }
    return true;
}

bool property_rank_bijection() {
    for (int n : {3, 7, 9, 13, 15, 19, 21}) {
        Order order(n);
        for (std::int64_t rank = 0; rank < order.triple_count(); ++rank) {
            Triple t = unrank_triple(rank, order);
            if (!(t.a < t.b && t.b < t.c)) return false;
            if (rank_triple(t.a, t.b, t.c, order).rank != rank) return false;
        }
    }
    return true;
}

bool property_colour_relabel_invariance(const AcceptOptions& options) {
    const int instances = options.quick ? 20 : 100;
    Rng rng(derive_seed(options.seed, SeedStream::kStreamColouring, 909));
    for (int i = 0; i < instances; ++i) {
        Order order(kOrders[rng.below(6)]);
        SteinerSystem system = relabel(canonical_system(order), rng.permutation(order.n()));
        const int r = 2 + static_cast<int>(rng.below(3));
        std::vector<std::uint8_t> colours(static_cast<std::size_t>(order.triple_count()));
        for (auto& c : colours) c = static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(r)));
        std::vector<int> sigma = rng.permutation(r);
        std::vector<std::uint8_t> relabelled(colours.size());
        for (std::size_t j = 0; j < colours.size(); ++j) {
            relabelled[j] = static_cast<std::uint8_t>(sigma[colours[j]]);
        }
        Colouring chi(order, r, colours), chi_sigma(order, r, relabelled);
        if (!(disc_on_system(system, chi) == disc_on_system(system, chi_sigma))) return false;
    }
    return true;
}

bool property_determinism(const AcceptOptions& options) {
    auto stats_once = [&] {
        return payload_random_stats({9}, {2}, 50, 20, options.seed).dump();
    };
    AnnealConfig cfg;
    cfg.restarts = 5;
    cfg.steps_per_restart = 0;
    cfg.t_initial = 0.0;
    cfg.seed = options.seed;
    auto sa_once = [&] { return payload_sa({7, 13}, 2, cfg).dump(); };
    auto search_once = [&] { return payload_exact_search({7}, 1000000).dump(); };
    return stats_once() == stats_once() && sa_once() == sa_once() &&
           search_once() == search_once();
}

bool property_monotone_subfamilies() {
    for (int n : {7, 9}) {
        Order order(n);
        LabelledFamily family = enumerate_all_labelled(order);
        ScaledDiscrepancy previous(0, 2);
        for (std::size_t size : {std::size_t{1}, std::size_t{5}, family.systems.size() / 2,
                                 family.systems.size()}) {
            LabelledFamily prefix{
                order,
                std::vector<SteinerSystem>(family.systems.begin(),
                                           family.systems.begin() + static_cast<std::ptrdiff_t>(size)),
                family.provenance};
            SearchOutcome outcome = exact_min_disc(order, prefix, 2000000000);
            if (!outcome.proved_optimal) return false;
            if (outcome.best_value < previous) return false;
            previous = outcome.best_value;
        }
    }
    return true;
}

bool property_basin_spread() {
    for (int n : {7, 9}) {
        Order order(n);
        const int x = conjectured_delta2(order).argmins.front();
        std::vector<int> cut(static_cast<std::size_t>(x));
        for (int i = 0; i < x; ++i) cut[static_cast<std::size_t>(i)] = i;
        BasinHistogram hist =
            two_flip_basin(order, build_cut_colouring(order, cut), enumerate_all_labelled(order));
        for (const auto& [num, count] : hist.counts) {
            if (std::llabs(num - hist.base_disc.num()) > 2 * hist.den) return false;
        }
    }
    return true;
}

CheckResult check_property_suite(const AcceptOptions& options) {
    struct Property {
        const char* name;
        bool passed;
    };
    const Property properties[] = {
        {"pair-coverage", property_pair_coverage()},
        {"rank-bijection", property_rank_bijection()},
        {"colour-relabel-invariance", property_colour_relabel_invariance(options)},
        {"determinism", property_determinism(options)},
        {"subfamily-monotonicity", property_monotone_subfamilies()},
        {"basin-spread", property_basin_spread()},
    };
    bool ok = true;
    std::ostringstream detail;
    for (const Property& property : properties) {
        ok = ok && property.passed;
        detail << property.name << (property.passed ? " ok; " : " FAILED; ");
    }
    return {9, "property-suite", ok, detail.str()};
}

CheckResult check_zero_disc_decision(const AcceptOptions& options) {
    Order order(9);
    LabelledFamily family = enumerate_all_labelled(order);
    ZeroDiscResult result = decide_zero_disc(order, family, options.quick ? 1000000 : 1000000000);
    std::ostringstream detail;
    detail << "n=9 over all 840 systems: ";
    switch (result.verdict) {
        case ZeroDiscVerdict::Infeasible:
            detail << "infeasible (nodes=" << result.nodes_explored << ")";
            return {10, "zero-disc-decision", true, detail.str()};
        case ZeroDiscVerdict::Unknown:
            detail << "unknown, budget exhausted (non-failing by design, nodes="
                   << result.nodes_explored << ")";
            return {10, "zero-disc-decision", true, detail.str()};
        case ZeroDiscVerdict::FeasibleWithWitness: {
            // the check expects infeasibility; a witness refutes it, so
            // validate the witness directly before reporting the refutation
            bool valid = result.witness.has_value();
            if (valid) {
                for (const SteinerSystem& system : family.systems) {
                    std::int64_t blue = 0;
                    for (std::int64_t rank : system.blocks()) {
                        blue += result.witness->colour(rank);
                    }
                    valid = valid && 2 * blue == order.block_count();
                }
            }
            detail << "feasible-with-witness (nodes=" << result.nodes_explored
                   << "), witness " << (valid ? "validated" : "INVALID")
                   << ": a balanced two-colouring of all 840 systems exists, so the expected "
                      "infeasibility does not hold";
            return {10, "zero-disc-decision", false, detail.str()};
        }
    }
    return {10, "zero-disc-decision", false, "unreachable verdict"};
}

}  // namespace

CheckResult run_criterion(int id, const AcceptOptions& options) {
    switch (id) {
        case 1: return check_enumeration_counts(options);
        case 2: return check_delta2_table(options);
        case 3: return check_blue_count_identity(options);
        case 4: return check_certified_optimum(options);
        case 5: return check_basin_census(options);
        case 6: return check_sa_two_colour(options);
        case 7: return check_sa_three_colour(options);
        case 8: return check_random_stats(options);
        case 9: return check_property_suite(options);
        case 10: return check_zero_disc_decision(options);
        default: throw DomainError("acceptance check ids run 1-10");
    }
}

std::vector<CheckResult> run_acceptance(const AcceptOptions& options) {
    std::vector<CheckResult> results;
    results.reserve(10);
    for (int id = 1; id <= 10; ++id) results.push_back(run_criterion(id, options));
    return results;
}

}  // namespace stsdisc
