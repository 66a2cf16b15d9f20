#include "stsdisc/stats.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "stsdisc/discrepancy.hpp"
#include "stsdisc/errors.hpp"
#include "stsdisc/rng.hpp"
#include "stsdisc/sts.hpp"

namespace stsdisc {

namespace {

// sums values[lo, hi) by recursive halving; order of magnitude more accurate
// than left-to-right accumulation and independent of chunking
double pairwise_sum(const std::vector<double>& values, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double sum = 0.0;
        for (std::size_t i = lo; i < hi; ++i) sum += values[i];
        return sum;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(values, lo, mid) + pairwise_sum(values, mid, hi);
}

}  // namespace

Colouring random_colouring(const Order& order, int r, std::uint64_t seed) {
    if (r < 2) throw DomainError("random colouring needs r >= 2");
    Rng rng(seed);
    std::vector<std::uint8_t> colours(static_cast<std::size_t>(order.triple_count()));
    for (auto& c : colours) {
        c = static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(r)));
    }
    return Colouring(order, r, std::move(colours));
}

RandomStatsReport mean_max_disc(const Order& order, int r, std::int64_t trials,
                                std::int64_t labellings, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be positive");
    if (labellings < 1) throw DomainError("labellings must be positive");
    if (r < 2) throw DomainError("random colouring needs r >= 2");

    LabelledFamily family =
        sample_labellings(canonical_system(order), labellings,
                          derive_seed(seed, SeedStream::kStreamStatsFamily, 0));

    std::vector<double> values(static_cast<std::size_t>(trials));
    for (std::int64_t i = 0; i < trials; ++i) {
        Colouring chi = random_colouring(
            order, r, derive_seed(seed, SeedStream::kStreamStatsTrial,
                                  static_cast<std::uint64_t>(i)));
        values[static_cast<std::size_t>(i)] =
            max_disc_over_systems(family.systems, chi).value();
    }

    const double mean = pairwise_sum(values, 0, values.size()) / static_cast<double>(trials);
    double std_error = 0.0;
    if (trials > 1) {
        std::vector<double> sq(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            sq[i] = (values[i] - mean) * (values[i] - mean);
        }
        const double ss = pairwise_sum(sq, 0, sq.size());
        std_error = std::sqrt(ss / (static_cast<double>(trials) *
                                    static_cast<double>(trials - 1)));
    }

    const double prediction = labellings >= 2
                                  ? gaussian_heuristic(order, r, labellings)
                                  : std::numeric_limits<double>::quiet_NaN();
    return RandomStatsReport{order.n(),  r,         trials,     labellings,
                             mean,       std_error, prediction, seed};
}

double gaussian_heuristic(const Order& order, int r, std::int64_t labellings) {
    if (r < 2) throw DomainError("heuristic needs r >= 2");
    if (labellings < 2) throw DomainError("heuristic needs at least 2 labellings");
    const double m = static_cast<double>(order.block_count());
    return std::sqrt(m / static_cast<double>(r)) *
           std::sqrt(2.0 * std::log(static_cast<double>(labellings)));
}

}  // namespace stsdisc
