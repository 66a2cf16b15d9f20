#pragma once

#include <vector>

#include "stsdisc/colouring.hpp"
#include "stsdisc/scaled_disc.hpp"
#include "stsdisc/steiner_system.hpp"

namespace stsdisc {

// max over colours c of |r * #{blocks of colour c} - m|, over denominator r.
ScaledDiscrepancy disc_on_system(const SteinerSystem& system, const Colouring& chi);

// Exact maximum of disc_on_system over a family; a lower-bound estimate when
// the family is sampled rather than exhaustive.
ScaledDiscrepancy max_disc_over_systems(const std::vector<SteinerSystem>& systems,
                                        const Colouring& chi);

}  // namespace stsdisc
