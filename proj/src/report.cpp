#include "stsdisc/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "stsdisc/errors.hpp"

namespace stsdisc {

namespace {

using json = nlohmann::json;

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string join_ints(const json& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ", ";
        out += std::to_string(v.get<long long>());
    }
    return out;
}

}  // namespace

std::string experiment_name(Experiment experiment) {
    switch (experiment) {
        case Experiment::Enumerate: return "enumerate";
        case Experiment::Delta2Formula: return "delta2-formula";
        case Experiment::ExactSearch: return "exact-search";
        case Experiment::ZeroDisc: return "zero-disc";
        case Experiment::Basin: return "basin";
        case Experiment::Sa: return "sa";
        case Experiment::RandomStats: return "random-stats";
    }
    throw DomainError("unknown experiment enum value");
}

Experiment experiment_from_name(const std::string& name) {
    if (name == "enumerate") return Experiment::Enumerate;
    if (name == "delta2-formula") return Experiment::Delta2Formula;
    if (name == "exact-search") return Experiment::ExactSearch;
    if (name == "zero-disc") return Experiment::ZeroDisc;
    if (name == "basin") return Experiment::Basin;
    if (name == "sa") return Experiment::Sa;
    if (name == "random-stats") return Experiment::RandomStats;
    throw ParseError("unknown experiment name: " + name);
}

nlohmann::json disc_to_json(const ScaledDiscrepancy& disc) {
    return json{{"num", disc.num()}, {"den", disc.den()}};
}

ScaledDiscrepancy disc_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        throw ParseError("discrepancy must be an object with num and den");
    }
    return ScaledDiscrepancy(j.at("num").get<std::int64_t>(), j.at("den").get<int>());
}

nlohmann::json report_to_json(const ExperimentReport& report) {
    return json{{"schema_version", 1},
                {"experiment", experiment_name(report.experiment)},
                {"parameters", report.parameters},
                {"seed", report.seed},
                {"results", report.results},
                {"tool_version", report.tool_version},
                {"wall_time_seconds", report.wall_time_seconds}};
}

ExperimentReport report_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("report must be a JSON object");
    if (j.value("schema_version", 0) != 1) {
        throw ParseError("unsupported report schema_version");
    }
    for (const char* key : {"experiment", "parameters", "seed", "results", "tool_version",
                            "wall_time_seconds"}) {
        if (!j.contains(key)) throw ParseError(std::string("report missing key: ") + key);
    }
    ExperimentReport report;
    report.experiment = experiment_from_name(j.at("experiment").get<std::string>());
    report.parameters = j.at("parameters");
    report.seed = j.at("seed").get<std::uint64_t>();
    report.results = j.at("results");
    report.tool_version = j.at("tool_version").get<std::string>();
    report.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    return report;
}

void save_report(const std::filesystem::path& path, const ExperimentReport& report) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open report file for writing: " + path.string());
    out << report_to_json(report).dump(2) << "\n";
}

ExperimentReport load_report(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open report file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("malformed report JSON: " + std::string(e.what()));
    }
    return report_from_json(j);
}

std::string render_enumerate(const nlohmann::json& results) {
    std::ostringstream out;
    for (const auto& row : results.at("rows")) {
        out << "n=" << row.at("n").get<int>() << ": " << row.at("count").get<std::int64_t>()
            << " labelled systems\n";
    }
    return out.str();
}

std::string render_delta2_table(const nlohmann::json& results) {
    std::ostringstream out;
    out << std::setw(4) << "n" << std::setw(8) << "blocks" << "  " << std::left << std::setw(16)
        << "optimal x" << std::right << std::setw(8) << "delta2" << "\n";
    for (const auto& row : results.at("rows")) {
        out << std::setw(4) << row.at("n").get<int>() << std::setw(8)
            << row.at("blocks").get<std::int64_t>() << "  " << std::left << std::setw(16)
            << join_ints(row.at("argmins")) << std::right << std::setw(8)
            << disc_from_json(row.at("value")).str() << "\n";
    }
    return out.str();
}

std::string render_exact_search(const nlohmann::json& results) {
    std::ostringstream out;
    for (const auto& row : results.at("rows")) {
        out << "n=" << row.at("n").get<int>() << ": best "
            << disc_from_json(row.at("best")).str();
        if (row.at("proved_optimal").get<bool>()) {
            out << " (proved optimal)";
        } else if (row.at("budget_exhausted").get<bool>()) {
            out << " (budget exhausted, incumbent only)";
        }
        out << ", nodes " << row.at("nodes").get<std::int64_t>() << "\n";
    }
    return out.str();
}

std::string render_zero_disc(const nlohmann::json& results) {
    std::ostringstream out;
    for (const auto& row : results.at("rows")) {
        out << "n=" << row.at("n").get<int>() << ": "
            << row.at("verdict").get<std::string>() << ", nodes "
            << row.at("nodes").get<std::int64_t>() << "\n";
    }
    return out.str();
}

std::string render_basin(const nlohmann::json& results) {
    std::ostringstream out;
    const ScaledDiscrepancy base = disc_from_json(results.at("base"));
    out << std::left << std::setw(34) << "discrepancy after two flips" << std::right
        << std::setw(8) << "count" << "\n";
    for (const auto& row : results.at("histogram")) {
        const ScaledDiscrepancy value = disc_from_json(row.at("value"));
        std::string label = value.str();
        const std::int64_t rise = value.num() - base.num();
        if (rise == 0) {
            label += " (unchanged)";
        } else if (rise % value.den() == 0) {
            label += (rise > 0 ? " (rises by " : " (drops by ") +
                     std::to_string(std::abs(rise) / value.den()) + ")";
        } else {
            label += (rise > 0 ? " (rises by " : " (drops by ") +
                     ScaledDiscrepancy(std::abs(rise), value.den()).str() + ")";
        }
        out << std::left << std::setw(34) << label << std::right << std::setw(8)
            << row.at("count").get<std::int64_t>() << "\n";
    }
    out << std::left << std::setw(34) << "total" << std::right << std::setw(8)
        << results.at("total").get<std::int64_t>() << "\n";
    out << "optimal fraction: " << fixed4(results.at("fraction_optimal").get<double>()) << "\n";
    return out.str();
}

std::string render_sa_table(const nlohmann::json& results) {
    std::ostringstream out;
    out << std::setw(4) << "n" << std::setw(8) << "blocks" << std::setw(8) << "delta2"
        << std::setw(10) << "estimate" << std::setw(8) << "est/n" << "\n";
    for (const auto& row : results.at("rows")) {
        out << std::setw(4) << row.at("n").get<int>() << std::setw(8)
            << row.at("blocks").get<std::int64_t>() << std::setw(8)
            << disc_from_json(row.at("delta2")).str() << std::setw(10)
            << disc_from_json(row.at("estimate")).str() << std::setw(8)
            << fixed2(row.at("ratio").get<double>()) << "\n";
    }
    return out.str();
}

std::string render_random_stats(const nlohmann::json& results) {
    // rows arrive n-major; regroup into one line per n with one column per r
    std::vector<int> orders;
    std::vector<int> colour_counts;
    for (const auto& row : results.at("rows")) {
        int n = row.at("n").get<int>();
        int r = row.at("r").get<int>();
        if (orders.empty() || orders.back() != n) orders.push_back(n);
        bool seen = false;
        for (int known : colour_counts) seen = seen || known == r;
        if (!seen) colour_counts.push_back(r);
    }

    auto cell = [&](int n, int r, const char* field) -> std::string {
        for (const auto& row : results.at("rows")) {
            if (row.at("n").get<int>() == n && row.at("r").get<int>() == r) {
                if (row.at(field).is_null()) return "n/a";
                return fixed2(row.at(field).get<double>());
            }
        }
        return "-";
    };

    std::ostringstream out;
    auto table = [&](const char* title, const char* field) {
        out << title << "\n" << std::setw(4) << "n";
        for (int r : colour_counts) out << std::setw(9) << ("r=" + std::to_string(r));
        out << "\n";
        for (int n : orders) {
            out << std::setw(4) << n;
            for (int r : colour_counts) out << std::setw(9) << cell(n, r, field);
            out << "\n";
        }
    };
    table("mean max discrepancy over the sampled family", "mean_max_disc");
    table("standard error", "std_error");
    table("Gaussian heuristic prediction", "heuristic_prediction");
    return out.str();
}

std::string render_report(const ExperimentReport& report) {
    switch (report.experiment) {
        case Experiment::Enumerate: return render_enumerate(report.results);
        case Experiment::Delta2Formula: return render_delta2_table(report.results);
        case Experiment::ExactSearch: return render_exact_search(report.results);
        case Experiment::ZeroDisc: return render_zero_disc(report.results);
        case Experiment::Basin: return render_basin(report.results);
        case Experiment::Sa: return render_sa_table(report.results);
        case Experiment::RandomStats: return render_random_stats(report.results);
    }
    throw DomainError("unknown experiment enum value");
}

}  // namespace stsdisc
