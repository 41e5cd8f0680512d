#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pandora/distribution.hpp"

namespace pandora {

/// Opening cost paired with a value distribution. Costs are positive in
/// every live code path; zero-cost boxes appear only in test fixtures.
struct BoxSpec {
  double cost = 1.0;
  Distribution dist;
};

/// Result of one run of the reservation-value search policy.
struct WeitzmanOutcome {
  std::vector<std::size_t> opened;  // visit order: ascending sigma, ties by index
  double selected_value = 0.0;      // minimum realized value among opened boxes
  double open_cost_paid = 0.0;      // sum of opening costs of opened boxes
  double total_cost = 0.0;          // selected_value + open_cost_paid
};

/// Opens boxes in ascending reservation value (ties broken by ascending
/// index) and stops as soon as the best value found so far is strictly below
/// the next box's reservation value; after the last box the sentinel +inf
/// forces a stop. All three spans must be non-empty and of equal length.
WeitzmanOutcome weitzman_run(std::span<const double> costs,
                             std::span<const double> sigmas,
                             std::span<const double> values);

/// Exact expected total cost of the search policy run with the given
/// reservation values, computed by enumerating the product of the discrete
/// supports. All distributions must be discrete and the product of support
/// sizes must not exceed 10^6.
double expected_weitzman_cost_exact(std::span<const BoxSpec> boxes,
                                    std::span<const double> sigmas);

/// Exact expected cost of the optimal adaptive policy, by dynamic
/// programming over (opened set, best value found): at each state the
/// policy either stops with the current best value or opens some remaining
/// box and proceeds optimally. Limited to at most 4 boxes with at most 4
/// support points each.
double bruteforce_optimal_cost(std::span<const BoxSpec> boxes);

}  // namespace pandora
