#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "stsdisc/scaled_disc.hpp"

namespace stsdisc {

enum class Experiment {
    Enumerate,
    Delta2Formula,
    ExactSearch,
    ZeroDisc,
    Basin,
    Sa,
    RandomStats,
};

std::string experiment_name(Experiment experiment);
Experiment experiment_from_name(const std::string& name);

// One run's persisted record. results carries the experiment-specific
// payload; everything else is provenance.
struct ExperimentReport {
    Experiment experiment;
    nlohmann::json parameters;  // object
    std::uint64_t seed = 0;
    nlohmann::json results;  // object
    std::string tool_version;
    double wall_time_seconds = 0.0;
};

nlohmann::json disc_to_json(const ScaledDiscrepancy& disc);
ScaledDiscrepancy disc_from_json(const nlohmann::json& j);

// Serialisation carries schema_version 1 at the top level and round-trips
// losslessly.
nlohmann::json report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const nlohmann::json& j);

void save_report(const std::filesystem::path& path, const ExperimentReport& report);
ExperimentReport load_report(const std::filesystem::path& path);

// Table renderers are pure functions of the results payload, so rendering a
// reloaded report reproduces the original text exactly.
std::string render_enumerate(const nlohmann::json& results);
std::string render_delta2_table(const nlohmann::json& results);
std::string render_exact_search(const nlohmann::json& results);
std::string render_zero_disc(const nlohmann::json& results);
std::string render_basin(const nlohmann::json& results);
std::string render_sa_table(const nlohmann::json& results);
std::string render_random_stats(const nlohmann::json& results);

// Dispatch on report.experiment.
std::string render_report(const ExperimentReport& report);

}  // namespace stsdisc
