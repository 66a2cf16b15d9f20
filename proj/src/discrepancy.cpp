#include "stsdisc/discrepancy.hpp"

#include <cstdlib>
#include <string>

#include "stsdisc/errors.hpp"

namespace stsdisc {

ScaledDiscrepancy disc_on_system(const SteinerSystem& system, const Colouring& chi) {
    if (system.order() != chi.order()) {
        throw DimensionMismatchError("system order " + std::to_string(system.order().n()) +
                                     " vs colouring order " + std::to_string(chi.order().n()));
    }
    const std::int64_t m = system.order().block_count();
    const int r = chi.r();
    std::int64_t worst = 0;
    for (int c = 0; c < r; ++c) {
        std::int64_t count = system.mask().and_count(chi.colour_mask(c));
        worst = std::max(worst, std::abs(r * count - m));
    }
    return ScaledDiscrepancy(worst, r);
}

ScaledDiscrepancy max_disc_over_systems(const std::vector<SteinerSystem>& systems,
                                        const Colouring& chi) {
    if (systems.empty()) {
        throw EmptyDomainError("max_disc_over_systems over an empty family");
    }
    std::int64_t worst = 0;
    for (const SteinerSystem& s : systems) {
        worst = std::max(worst, disc_on_system(s, chi).num());
    }
    return ScaledDiscrepancy(worst, chi.r());
}

}  // namespace stsdisc
