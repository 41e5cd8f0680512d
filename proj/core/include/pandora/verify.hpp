#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pandora/weitzman.hpp"

namespace pandora::verify {

/// Outcome of one property suite. A suite passes iff no case exceeded its
/// tolerance; worst_residual is the largest residual/violation observed
/// (sign convention per suite, see the run_suite implementations).
struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return failures == 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 0x7061646f72615f76ULL;

const std::vector<std::string>& suite_names();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteResult run_suite(std::string_view name,
                      std::uint64_t seed = kDefaultSeed);

std::vector<SuiteResult> run_all(std::uint64_t seed = kDefaultSeed);

// Case-level checks backing the suites; exposed so fixtures and negative
// controls can exercise them directly.

/// |exact search-policy cost at the given sigmas - optimal-policy cost|.
double weitzman_optimality_residual(std::span<const BoxSpec> boxes,
                                    std::span<const double> sigmas);

/// Positive part of WEITZ(sigma_hat) - WEITZ(sigma_star) - sum_i
/// |c_Di(sigma_hat_i) - cost_i|; zero when the robustness inequality holds.
double robustness_violation(std::span<const BoxSpec> boxes,
                            std::span<const double> sigma_star,
                            std::span<const double> sigma_hat);

/// Positive part of 0.5*(c_D(sigma) - c_D(sigma*))^2 - E[lq_loss(sigma - v)
/// - lq_loss(sigma* - v)], expectations exact over the discrete support.
double lq_lower_bound_violation(const Distribution& dist, double cost,
                                double sigma);

/// Relative gap between the analytic regression-loss gradient and central
/// finite differences with step 1e-6.
double gradient_check_rel_error(const Vec& w, const Vec& x, double y, double c);

}  // namespace pandora::verify
