#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stsdisc/accept.hpp"
#include "stsdisc/anneal.hpp"
#include "stsdisc/errors.hpp"
#include "stsdisc/experiments.hpp"
#include "stsdisc/report.hpp"
#include "stsdisc/search.hpp"
#include "stsdisc/sts.hpp"
#include "stsdisc/version.hpp"

namespace {

using nlohmann::json;
using namespace stsdisc;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Renders to stdout and persists the versioned report.
void emit(Experiment experiment, json parameters, std::uint64_t seed, json results,
          double wall_seconds, const std::filesystem::path& out) {
    ExperimentReport report{experiment, std::move(parameters), seed,
                            std::move(results),  kToolVersion,  wall_seconds};
    std::cout << render_report(report);
    save_report(out, report);
    std::cout << "report written to " << out.string() << "\n";
}

std::filesystem::path checkpoint_path(const std::filesystem::path& out) {
    std::filesystem::path path = out;
    path.replace_extension(".checkpoint.json");
    return path;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colouring discrepancy toolkit for Steiner triple systems"};
    app.require_subcommand(1);

    std::vector<int> orders{7, 9};
    int r = 2;
    std::int64_t trials = 5000;
    std::int64_t labellings = 200;
    std::int64_t restarts = 1000;
    std::int64_t steps = 0;  // 0 resolves to the per-order default
    std::int64_t budget = 1000000000;
    std::uint64_t seed = 42;
    std::string out;
    bool count_only = false;
    bool quick = false;
    std::string sts_file;

    auto add_common = [&](CLI::App* cmd, bool with_orders = true) {
        if (with_orders) cmd->add_option("--n", orders, "orders to process")->capture_default_str();
        cmd->add_option("--seed", seed, "master seed")->capture_default_str();
        cmd->add_option("--out", out, "report output path");
    };

    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "count labelled systems per order");
    add_common(cmd_enumerate);
    cmd_enumerate->add_flag("--count-only", count_only, "suppress block listings");

    CLI::App* cmd_construct = app.add_subcommand("construct", "print one system per order");
    cmd_construct->add_option("--n", orders, "orders to construct")->capture_default_str();

    CLI::App* cmd_delta2 = app.add_subcommand("delta2-formula", "closed-form minimum over cut colourings");
    add_common(cmd_delta2);

    CLI::App* cmd_search = app.add_subcommand("exact-search", "certified minimum two-colouring discrepancy");
    add_common(cmd_search);
    cmd_search->add_option("--budget", budget, "node budget")->capture_default_str();

    CLI::App* cmd_zero = app.add_subcommand("zero-disc", "decide whether a perfectly balanced two-colouring exists");
    add_common(cmd_zero);
    cmd_zero->add_option("--budget", budget, "node budget")->capture_default_str();

    int basin_n = 9;
    CLI::App* cmd_basin = app.add_subcommand("basin", "two-flip census around the best cut colouring");
    cmd_basin->add_option("--n", basin_n, "order")->capture_default_str();
    cmd_basin->add_option("--seed", seed, "master seed")->capture_default_str();
    cmd_basin->add_option("--out", out, "report output path");

    CLI::App* cmd_sa = app.add_subcommand("sa", "simulated-annealing discrepancy estimates");
    add_common(cmd_sa);
    cmd_sa->add_option("--r", r, "number of colours")->capture_default_str();
    cmd_sa->add_option("--restarts", restarts, "independent restarts")->capture_default_str();
    cmd_sa->add_option("--steps", steps, "steps per restart, 0 = per-order default")
        ->capture_default_str();
    cmd_sa->add_option("--labellings", labellings, "relabellings per order when not exhaustive")
        ->capture_default_str();

    std::vector<int> rs{2, 3, 4};
    CLI::App* cmd_stats = app.add_subcommand("random-stats", "mean max discrepancy of uniform colourings");
    add_common(cmd_stats);
    cmd_stats->add_option("--r", rs, "colour counts")->capture_default_str();
    cmd_stats->add_option("--trials", trials, "colourings per (n, r)")->capture_default_str();
    cmd_stats->add_option("--labellings", labellings, "relabellings per order")
        ->capture_default_str();

    CLI::App* cmd_verify = app.add_subcommand("verify-all", "run the acceptance checks");
    cmd_verify->add_option("--seed", seed, "master seed")->capture_default_str();
    cmd_verify->add_flag("--quick", quick, "reduced effort, widened bounds");

    CLI::App* cmd_export = app.add_subcommand("export-sts", "write one system to a text file");
    cmd_export->add_option("--n", basin_n, "order")->capture_default_str();
    cmd_export->add_option("file", sts_file, "destination path")->required();

    CLI::App* cmd_import = app.add_subcommand("import-sts", "read and validate a system file");
    cmd_import->add_option("file", sts_file, "source path")->required()
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (out.empty()) out = cmd_sa->parsed() ? "sa_results.json" : "experiment_results.json";

    try {
        if (cmd_enumerate->parsed()) {
            Timer timer;
            json results = payload_enumerate(orders);
            json parameters{{"orders", orders}, {"count_only", count_only}};
            emit(Experiment::Enumerate, parameters, seed, results, timer.seconds(), out);
            if (!count_only) {
                for (int n : orders) {
                    LabelledFamily family = enumerate_all_labelled(Order(n));
                    for (const SteinerSystem& system : family.systems) {
                        write_sts(std::cout, system);
                        std::cout << "\n";
                    }
                }
            }
        } else if (cmd_construct->parsed()) {
            for (int n : orders) write_sts(std::cout, canonical_system(Order(n)));
        } else if (cmd_delta2->parsed()) {
            Timer timer;
            json results = payload_delta2(orders);
            emit(Experiment::Delta2Formula, json{{"orders", orders}}, seed, results,
                 timer.seconds(), out);
        } else if (cmd_search->parsed()) {
            Timer timer;
            json results = payload_exact_search(orders, budget);
            emit(Experiment::ExactSearch, json{{"orders", orders}, {"budget", budget}}, seed,
                 results, timer.seconds(), out);
            for (const auto& row : results.at("rows")) {
                if (!row.at("budget_exhausted").get<bool>()) continue;
                // rebuild the interrupted state; the search is deterministic
                int n = row.at("n").get<int>();
                Order order(n);
                SearchOutcome outcome = exact_min_disc(order, enumerate_all_labelled(order), budget);
                SearchCheckpoint checkpoint{n, outcome.decided_prefix, outcome.best_value,
                                            std::nullopt, outcome.nodes_explored};
                if (outcome.witness.has_value()) checkpoint.witness = outcome.witness->colours();
                write_checkpoint(checkpoint_path(out), checkpoint);
                std::cout << "budget exhausted at n=" << n << ", checkpoint written to "
                          << checkpoint_path(out).string() << "\n";
            }
        } else if (cmd_zero->parsed()) {
            Timer timer;
            json results = payload_zero_disc(orders, budget);
            emit(Experiment::ZeroDisc, json{{"orders", orders}, {"budget", budget}}, seed,
                 results, timer.seconds(), out);
        } else if (cmd_basin->parsed()) {
            Timer timer;
            json results = payload_basin(basin_n);
            emit(Experiment::Basin, json{{"n", basin_n}}, seed, results, timer.seconds(), out);
        } else if (cmd_sa->parsed()) {
            Timer timer;
            AnnealConfig cfg;
            cfg.r = r;
            cfg.labellings = labellings;
            cfg.restarts = restarts;
            cfg.steps_per_restart = steps;
            cfg.t_initial = 0.0;  // resolves to the per-order default
            cfg.seed = seed;
            json results = payload_sa(orders, r, cfg);
            json parameters{{"orders", orders}, {"r", r},       {"restarts", restarts},
                            {"steps", steps},   {"labellings", labellings}};
            emit(Experiment::Sa, parameters, seed, results, timer.seconds(), out);
        } else if (cmd_stats->parsed()) {
            Timer timer;
            json results = payload_random_stats(orders, rs, trials, labellings, seed);
            json parameters{{"orders", orders},
                            {"r", rs},
                            {"trials", trials},
                            {"labellings", labellings}};
            emit(Experiment::RandomStats, parameters, seed, results, timer.seconds(), out);
        } else if (cmd_verify->parsed()) {
            AcceptOptions options;
            options.seed = seed;
            options.quick = quick;
            bool all_passed = true;
            for (const CheckResult& result : run_acceptance(options)) {
                all_passed = all_passed && result.passed;
                std::cout << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << " "
                          << result.name << ": " << result.detail << "\n";
            }
            std::cout << (all_passed ? "all checks passed" : "some checks failed") << "\n";
            return all_passed ? 0 : 1;
        } else if (cmd_export->parsed()) {
            std::ofstream file(sts_file);
            if (!file) throw ParseError("cannot open " + sts_file + " for writing");
            write_sts(file, canonical_system(Order(basin_n)));
            std::cout << "wrote order-" << basin_n << " system to " << sts_file << "\n";
        } else if (cmd_import->parsed()) {
            std::ifstream file(sts_file);
            SteinerSystem system = read_sts(file);
            std::cout << "valid system of order " << system.order().n() << " with "
                      << system.blocks().size() << " blocks\n";
        }
    } catch (const FeasibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ConstructionDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
