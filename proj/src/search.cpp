#include "stsdisc/search.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <string>

#include <json.hpp>

#include "stsdisc/cut_colouring.hpp"
#include "stsdisc/discrepancy.hpp"
#include "stsdisc/errors.hpp"

namespace stsdisc {

namespace {

using json = nlohmann::json;

void check_family(const Order& order, const LabelledFamily& family) {
    if (family.systems.empty()) throw EmptyDomainError("search over an empty family");
    if (family.order != order) {
        throw DimensionMismatchError("family order " + std::to_string(family.order.n()) +
                                     " vs requested order " + std::to_string(order.n()));
    }
}

// ------------------------------------------------------------------
// branch and bound for exact_min_disc (r = 2)
// ------------------------------------------------------------------

struct BranchAndBound {
    std::int32_t m = 0;
    std::int32_t parity_num = 0;
    std::int64_t budget = 0;
    std::int64_t universe = 0;

    std::vector<std::int64_t> var_rank;                // DFS variable order
    std::vector<std::vector<std::int32_t>> var_systems;  // per variable
    std::vector<std::int32_t> blue, decided, minfeas;
    std::vector<std::int32_t> hist;  // histogram of per-system minfeas
    std::int32_t bound = 0;          // max nonempty histogram bucket

    std::vector<std::uint8_t> assignment;  // per variable, valid up to depth
    std::vector<std::pair<std::int64_t, int>> path;

    std::int64_t nodes = 0;
    std::int64_t incumbent_num = 0;
    std::vector<std::uint8_t> incumbent_colours;

    enum class Stop { kNone, kBudget, kCertified };
    Stop stop = Stop::kNone;
    std::vector<std::pair<std::int64_t, int>> prefix_at_stop;

    // tightest final numerator a system can still reach
    std::int32_t feasible_floor(std::size_t s) const {
        std::int32_t b = blue[s];
        std::int32_t hi = b + (m - decided[s]);
        if (2 * hi <= m) return m - 2 * hi;
        if (2 * b >= m) return 2 * b - m;
        return m & 1;
    }

    void apply(std::size_t depth, int colour) {
        for (std::int32_t s : var_systems[depth]) {
            auto u = static_cast<std::size_t>(s);
            --hist[minfeas[u]];
            ++decided[u];
            blue[u] += colour;
            std::int32_t nf = feasible_floor(u);
            minfeas[u] = nf;
            ++hist[nf];
            if (nf > bound) bound = nf;
        }
        while (bound > 0 && hist[bound] == 0) --bound;
    }

    void undo(std::size_t depth, int colour) {
        for (std::int32_t s : var_systems[depth]) {
            auto u = static_cast<std::size_t>(s);
            --hist[minfeas[u]];
            --decided[u];
            blue[u] -= colour;
            std::int32_t nf = feasible_floor(u);
            minfeas[u] = nf;
            ++hist[nf];
        }
        while (bound > 0 && hist[bound] == 0) --bound;
    }

    void record_leaf() {
        incumbent_num = bound;
        for (std::size_t i = 0; i < var_rank.size(); ++i) {
            incumbent_colours[static_cast<std::size_t>(var_rank[i])] = assignment[i];
        }
        if (incumbent_num <= parity_num) stop = Stop::kCertified;
    }

    void dfs(std::size_t depth) {
        if (stop != Stop::kNone) return;
        if (++nodes > budget) {
            stop = Stop::kBudget;
            prefix_at_stop = path;
            return;
        }
        if (std::max(bound, parity_num) >= incumbent_num) return;
        if (depth == var_rank.size()) {
            record_leaf();
            return;
        }
        // complement symmetry: the first variable's colour is WLOG 0
        const int last = depth == 0 ? 0 : 1;
        for (int colour = 0; colour <= last; ++colour) {
            assignment[depth] = static_cast<std::uint8_t>(colour);
            path.emplace_back(var_rank[depth], colour);
            apply(depth, colour);
            dfs(depth + 1);
            undo(depth, colour);
            path.pop_back();
            if (stop != Stop::kNone) return;
        }
    }
};

}  // namespace

ScaledDiscrepancy parity_lower_bound(const Order& order, int r) {
    if (r < 2) throw DomainError("parity lower bound needs r >= 2");
    const std::int64_t m = order.block_count();
    const std::int64_t s = m % r;
    // counts other than floor(m/r) and ceil(m/r) only widen the maximum
    return ScaledDiscrepancy(s == 0 ? 0 : std::max(s, r - s), r);
}

SearchOutcome exact_min_disc(const Order& order, const LabelledFamily& family,
                             std::int64_t budget) {
    check_family(order, family);
    if (budget < 1) throw DomainError("node budget must be positive");

    const std::int32_t parity_num = static_cast<std::int32_t>(parity_lower_bound(order, 2).num());

    // incumbent: best cut colouring; its discrepancy is system-independent
    Delta2Result delta2 = conjectured_delta2(order);
    std::vector<int> cut(static_cast<std::size_t>(delta2.argmins.front()));
    std::iota(cut.begin(), cut.end(), 0);
    Colouring cut_chi = build_cut_colouring(order, cut);
    std::int64_t incumbent_num = max_disc_over_systems(family.systems, cut_chi).num();

    if (incumbent_num <= parity_num) {
        return SearchOutcome{ScaledDiscrepancy(incumbent_num, 2), cut_chi, true, 0, false, {}};
    }

    BranchAndBound bnb;
    bnb.m = static_cast<std::int32_t>(order.block_count());
    bnb.parity_num = parity_num;
    bnb.budget = budget;
    bnb.universe = order.triple_count();

    auto systems_of = membership_index(order, family);
    // variables: covered triples, most-constrained first
    std::vector<std::int64_t> ranks;
    for (std::int64_t rank = 0; rank < order.triple_count(); ++rank) {
        if (!systems_of[static_cast<std::size_t>(rank)].empty()) ranks.push_back(rank);
    }
    std::stable_sort(ranks.begin(), ranks.end(), [&](std::int64_t a, std::int64_t b) {
        return systems_of[static_cast<std::size_t>(a)].size() >
               systems_of[static_cast<std::size_t>(b)].size();
    });
    bnb.var_rank = ranks;
    bnb.var_systems.reserve(ranks.size());
    for (std::int64_t rank : ranks) {
        bnb.var_systems.push_back(std::move(systems_of[static_cast<std::size_t>(rank)]));
    }

    const std::size_t nsys = family.systems.size();
    bnb.blue.assign(nsys, 0);
    bnb.decided.assign(nsys, 0);
    bnb.minfeas.assign(nsys, bnb.m & 1);
    bnb.hist.assign(static_cast<std::size_t>(bnb.m) + 1, 0);
    bnb.hist[static_cast<std::size_t>(bnb.m & 1)] = static_cast<std::int32_t>(nsys);
    bnb.bound = bnb.m & 1;
    bnb.assignment.assign(ranks.size(), 0);
    bnb.incumbent_num = incumbent_num;
    bnb.incumbent_colours = cut_chi.colours();

    bnb.dfs(0);

    SearchOutcome outcome{ScaledDiscrepancy(bnb.incumbent_num, 2),
                          Colouring(order, 2, bnb.incumbent_colours),
                          bnb.stop != BranchAndBound::Stop::kBudget,
                          bnb.nodes,
                          bnb.stop == BranchAndBound::Stop::kBudget,
                          bnb.prefix_at_stop};
    return outcome;
}

// ------------------------------------------------------------------
// zero-discrepancy decision
// ------------------------------------------------------------------

namespace {

struct ZeroDiscSolver {
    std::int32_t half = 0;
    std::int64_t budget = 0;
    std::int64_t nodes = 0;

    const LabelledFamily* family = nullptr;
    std::vector<std::vector<std::int32_t>> systems_of;
    std::vector<std::int8_t> colour;  // -1 undecided
    std::vector<std::int32_t> blue, undec;
    std::vector<std::int64_t> trail;
    std::vector<std::pair<std::int64_t, int>> branch_path;
    std::vector<std::pair<std::int64_t, int>> prefix_at_stop;

    std::vector<std::int32_t> score;          // scratch for branching
    std::vector<std::int64_t> touched_score;  // scratch reset list

    bool propagate(std::int64_t rank, std::int8_t c) {
        std::vector<std::pair<std::int64_t, std::int8_t>> pending{{rank, c}};
        while (!pending.empty()) {
            auto [rk, cc] = pending.back();
            pending.pop_back();
            auto urk = static_cast<std::size_t>(rk);
            if (colour[urk] == cc) continue;
            if (colour[urk] != -1) return false;
            colour[urk] = cc;
            trail.push_back(rk);
            for (std::int32_t s : systems_of[urk]) {
                auto us = static_cast<std::size_t>(s);
                --undec[us];
                blue[us] += cc;
                if (blue[us] > half || blue[us] + undec[us] < half) return false;
                if (undec[us] == 0) continue;
                std::int8_t forced;
                if (blue[us] == half) {
                    forced = 0;
                } else if (blue[us] + undec[us] == half) {
                    forced = 1;
                } else {
                    continue;
                }
                for (std::int64_t blk : family->systems[us].blocks()) {
                    if (colour[static_cast<std::size_t>(blk)] == -1) {
                        pending.emplace_back(blk, forced);
                    }
                }
            }
        }
        return true;
    }

    void rewind(std::size_t mark) {
        while (trail.size() > mark) {
            std::int64_t rk = trail.back();
            trail.pop_back();
            auto urk = static_cast<std::size_t>(rk);
            std::int8_t c = colour[urk];
            colour[urk] = -1;
            for (std::int32_t s : systems_of[urk]) {
                auto us = static_cast<std::size_t>(s);
                ++undec[us];
                blue[us] -= c;
            }
        }
    }

    // undecided triple appearing in the most minimum-slack constraints;
    // -1 once every constraint is decided
    std::int64_t pick_branch_triple() {
        std::int32_t min_slack = -1;
        for (std::size_t s = 0; s < family->systems.size(); ++s) {
            if (undec[s] == 0) continue;
            std::int32_t slack = std::min(half - blue[s], blue[s] + undec[s] - half);
            if (min_slack < 0 || slack < min_slack) min_slack = slack;
        }
        if (min_slack < 0) return -1;

        std::int64_t best = -1;
        std::int32_t best_score = 0;
        for (std::size_t s = 0; s < family->systems.size(); ++s) {
            if (undec[s] == 0) continue;
            std::int32_t slack = std::min(half - blue[s], blue[s] + undec[s] - half);
            if (slack != min_slack) continue;
            for (std::int64_t blk : family->systems[s].blocks()) {
                auto ub = static_cast<std::size_t>(blk);
                if (colour[ub] != -1) continue;
                if (score[ub] == 0) touched_score.push_back(blk);
                ++score[ub];
                if (score[ub] > best_score ||
                    (score[ub] == best_score && (best < 0 || blk < best))) {
                    best_score = score[ub];
                    best = blk;
                }
            }
        }
        for (std::int64_t blk : touched_score) score[static_cast<std::size_t>(blk)] = 0;
        touched_score.clear();
        return best;
    }

    // 0 = infeasible subtree, 1 = witness found, 2 = budget exhausted
    int dfs(std::size_t depth) {
        if (++nodes > budget) {
            prefix_at_stop = branch_path;
            return 2;
        }
        std::int64_t rank = pick_branch_triple();
        if (rank < 0) return 1;  // propagation bounds force blue == half everywhere

        // the root branch is WLOG blue: complementing preserves balance
        for (std::int8_t c : {std::int8_t{1}, std::int8_t{0}}) {
            std::size_t mark = trail.size();
            branch_path.emplace_back(rank, c);
            if (propagate(rank, c)) {
                int rv = dfs(depth + 1);
                if (rv != 0) return rv;
            }
            rewind(mark);
            branch_path.pop_back();
            if (depth == 0) break;
        }
        return 0;
    }
};

}  // namespace

ZeroDiscResult decide_zero_disc(const Order& order, const LabelledFamily& family,
                                std::int64_t budget) {
    check_family(order, family);
    if (budget < 1) throw DomainError("node budget must be positive");
    const std::int64_t m = order.block_count();
    if (m % 2 != 0) {
        return ZeroDiscResult{ZeroDiscVerdict::Infeasible, std::nullopt, 0, false, {}};
    }

    ZeroDiscSolver solver;
    solver.half = static_cast<std::int32_t>(m / 2);
    solver.budget = budget;
    solver.family = &family;
    solver.systems_of = membership_index(order, family);
    solver.colour.assign(static_cast<std::size_t>(order.triple_count()), -1);
    solver.blue.assign(family.systems.size(), 0);
    solver.undec.assign(family.systems.size(), static_cast<std::int32_t>(m));
    solver.score.assign(static_cast<std::size_t>(order.triple_count()), 0);

    int rv = solver.dfs(0);
    if (rv == 1) {
        std::vector<std::uint8_t> colours(solver.colour.size(), 0);
        for (std::size_t i = 0; i < solver.colour.size(); ++i) {
            if (solver.colour[i] == 1) colours[i] = 1;
        }
        return ZeroDiscResult{ZeroDiscVerdict::FeasibleWithWitness,
                              Colouring(order, 2, std::move(colours)), solver.nodes, false, {}};
    }
    if (rv == 2) {
        return ZeroDiscResult{ZeroDiscVerdict::Unknown, std::nullopt, solver.nodes, true,
                              solver.prefix_at_stop};
    }
    return ZeroDiscResult{ZeroDiscVerdict::Infeasible, std::nullopt, solver.nodes, false, {}};
}

// ------------------------------------------------------------------
// two-flip basin census
// ------------------------------------------------------------------

BasinHistogram two_flip_basin(const Order& order, const Colouring& base,
                              const LabelledFamily& family) {
    check_family(order, family);
    if (base.r() != 2) throw DomainError("two-flip basin is defined for 2-colourings");
    if (base.order() != order) {
        throw DimensionMismatchError("base colouring order mismatch");
    }

    const std::int64_t m = order.block_count();
    const std::int64_t t = order.triple_count();
    const std::size_t nsys = family.systems.size();

    std::vector<std::int32_t> base_blue(nsys), base_num(nsys);
    std::int32_t max_base = 0;
    for (std::size_t s = 0; s < nsys; ++s) {
        base_blue[s] =
            static_cast<std::int32_t>(family.systems[s].mask().and_count(base.colour_mask(1)));
        base_num[s] = static_cast<std::int32_t>(std::abs(2 * base_blue[s] - m));
        max_base = std::max(max_base, base_num[s]);
    }
    std::vector<std::int32_t> count_at(static_cast<std::size_t>(m) + 3, 0);
    for (std::size_t s = 0; s < nsys; ++s) ++count_at[static_cast<std::size_t>(base_num[s])];

    auto systems_of = membership_index(order, family);
    // delta[i]: +1 when flipping rank i turns it blue, -1 when it turns red
    std::vector<std::int8_t> delta(static_cast<std::size_t>(t));
    for (std::int64_t i = 0; i < t; ++i) {
        delta[static_cast<std::size_t>(i)] = base.colour(i) == 1 ? -1 : 1;
    }

    BasinHistogram hist{max_disc_over_systems(family.systems, base), 2, {}};
    std::vector<std::int32_t> affected;
    std::vector<std::int32_t> new_blue;

    for (std::int64_t i = 0; i < t; ++i) {
        const auto& si = systems_of[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < t; ++j) {
            const auto& sj = systems_of[static_cast<std::size_t>(j)];
            affected.clear();
            new_blue.clear();

            // merge the two sorted membership lists
            std::size_t a = 0, b = 0;
            while (a < si.size() || b < sj.size()) {
                if (b == sj.size() || (a < si.size() && si[a] < sj[b])) {
                    affected.push_back(si[a]);
                    new_blue.push_back(base_blue[static_cast<std::size_t>(si[a])] +
                                       delta[static_cast<std::size_t>(i)]);
                    ++a;
                } else if (a == si.size() || sj[b] < si[a]) {
                    affected.push_back(sj[b]);
                    new_blue.push_back(base_blue[static_cast<std::size_t>(sj[b])] +
                                       delta[static_cast<std::size_t>(j)]);
                    ++b;
                } else {
                    affected.push_back(si[a]);
                    new_blue.push_back(base_blue[static_cast<std::size_t>(si[a])] +
                                       delta[static_cast<std::size_t>(i)] +
                                       delta[static_cast<std::size_t>(j)]);
                    ++a;
                    ++b;
                }
            }

            std::int32_t worst = -1;
            for (std::size_t k = 0; k < affected.size(); ++k) {
                auto us = static_cast<std::size_t>(affected[k]);
                --count_at[static_cast<std::size_t>(base_num[us])];
                worst = std::max(
                    worst, static_cast<std::int32_t>(std::abs(2 * new_blue[k] - m)));
            }
            std::int32_t untouched = max_base;
            while (untouched > 0 && count_at[static_cast<std::size_t>(untouched)] == 0) {
                --untouched;
            }
            if (count_at[static_cast<std::size_t>(untouched)] > 0) {
                worst = std::max(worst, untouched);
            }
            for (std::size_t k = 0; k < affected.size(); ++k) {
                ++count_at[static_cast<std::size_t>(base_num[affected[k]])];
            }
            ++hist.counts[worst];
        }
    }
    return hist;
}

double basin_fraction_optimal(const BasinHistogram& hist) {
    const std::int64_t total = hist.total();
    if (total == 0) throw EmptyDomainError("empty basin histogram");
    auto it = hist.counts.find(hist.base_disc.num());
    return it == hist.counts.end() ? 0.0
                                   : static_cast<double>(it->second) / static_cast<double>(total);
}

// ------------------------------------------------------------------
// checkpoint persistence
// ------------------------------------------------------------------

void write_checkpoint(const std::filesystem::path& path, const SearchCheckpoint& checkpoint) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = "search-checkpoint";
    j["n"] = checkpoint.n;
    j["decided_prefix"] = json::array();
    for (const auto& [rank, colour] : checkpoint.decided_prefix) {
        j["decided_prefix"].push_back({{"rank", rank}, {"colour", colour}});
    }
    j["incumbent"] = {{"num", checkpoint.incumbent.num()}, {"den", checkpoint.incumbent.den()}};
    if (checkpoint.witness.has_value()) {
        j["witness"] = *checkpoint.witness;
    } else {
        j["witness"] = nullptr;
    }
    j["nodes"] = checkpoint.nodes;
    std::ofstream out(path);
    if (!out) throw Error("cannot open checkpoint file for writing: " + path.string());
    out << j.dump(2) << "\n";
}

SearchCheckpoint load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open checkpoint file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("malformed checkpoint JSON: " + std::string(e.what()));
    }
    if (j.value("schema_version", 0) != 1 || j.value("kind", "") != "search-checkpoint") {
        throw ParseError("not a version-1 search checkpoint: " + path.string());
    }
    SearchCheckpoint checkpoint{j.at("n").get<int>(),
                                {},
                                ScaledDiscrepancy(j.at("incumbent").at("num").get<std::int64_t>(),
                                                  j.at("incumbent").at("den").get<int>()),
                                std::nullopt,
                                j.at("nodes").get<std::int64_t>()};
    for (const auto& entry : j.at("decided_prefix")) {
        checkpoint.decided_prefix.emplace_back(entry.at("rank").get<std::int64_t>(),
                                               entry.at("colour").get<int>());
    }
    if (!j.at("witness").is_null()) {
        checkpoint.witness = j.at("witness").get<std::vector<std::uint8_t>>();
    }
    return checkpoint;
}

}  // namespace stsdisc
