#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "stsdisc/anneal.hpp"
#include "stsdisc/order.hpp"

namespace stsdisc {

// Experiment payload builders shared by the command-line driver and the
// acceptance suite. Each returns the results object of an ExperimentReport;
// all randomness is derived from the seed argument, so identical calls
// produce identical payloads.

nlohmann::json payload_enumerate(const std::vector<int>& orders);

nlohmann::json payload_delta2(const std::vector<int>& orders);

nlohmann::json payload_exact_search(const std::vector<int>& orders, std::int64_t budget);

nlohmann::json payload_zero_disc(const std::vector<int>& orders, std::int64_t budget);

// Census around the best cut colouring (smallest minimising x).
nlohmann::json payload_basin(int n);

// One annealing row per order. Families are exhaustive at n <= 9 and
// cfg.labellings relabellings of the canonical system otherwise, seeded per
// order from cfg.seed.
nlohmann::json payload_sa(const std::vector<int>& orders, int r, const AnnealConfig& cfg);

nlohmann::json payload_random_stats(const std::vector<int>& orders, const std::vector<int>& rs,
                                    std::int64_t trials, std::int64_t labellings,
                                    std::uint64_t seed);

}  // namespace stsdisc
