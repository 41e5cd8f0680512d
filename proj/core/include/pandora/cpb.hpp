#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pandora/distribution.hpp"
#include "pandora/oracle.hpp"
#include "pandora/weitzman.hpp"

namespace pandora {

enum class FeedbackMode { full, bandit };

struct CpbConfig {
  int n_boxes = 1;
  int dim = 1;
  int horizon = 1;
  std::vector<double> costs;  // one positive opening cost per box
  double norm_bound = 1.0;
  FeedbackMode feedback = FeedbackMode::full;
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument on violation
};

/// One round of the environment. true_sigmas and dists are ground truth,
/// hidden from the learner and used only for regret accounting and checks.
struct RoundInstance {
  std::vector<Vec> contexts;    // n contexts of dimension d, |x| <= 1
  Vec realized_values;          // n draws, one per box
  Vec true_sigmas;              // optimal reservation values for this round
  std::vector<Distribution> dists;
};

struct RoundResult {
  Vec predicted_sigmas;
  WeitzmanOutcome outcome;
  double extra_open_cost = 0.0;  // bandit-mode feedback openings outside the play
  double round_cost = 0.0;       // outcome.total_cost + extra_open_cost
  double opt_cost = 0.0;         // play at true sigmas on the same values
};

struct RegretTrace {
  std::vector<double> round_cost;
  std::vector<double> opt_cost;
  std::vector<double> cum_algo_cost;
  std::vector<double> cum_opt_cost;
  std::vector<double> cum_regret;  // cum_algo_cost - cum_opt_cost

  void append(double round, double opt);
  int rounds() const { return static_cast<int>(round_cost.size()); }
};

/// One oracle per box: the FTRL oracle with loss parameter cost_i and
/// eta = ftrl_eta(M, cost_i, T); in bandit mode each is wrapped in the
/// costly-feedback oracle with interval length interval_size(T, cost_i, M)
/// and a per-box seed derived from config.seed.
std::vector<std::unique_ptr<RegressionOracle>> make_cpb_oracles(
    const CpbConfig& config);

/// Plays one round: queries each oracle, sets sigma_i = <w_i, x_i> (used
/// raw, without clamping), runs the search policy, then feeds observations
/// back. Full mode feeds every box's pair; bandit mode feeds only oracles
/// that request feedback, opening the box at its cost if the play had not
/// already opened it this round (an already-opened box's value is reused at
/// no extra cost). opt_cost replays the policy with the true reservation
/// values on the identical realized values.
RoundResult cpb_round(std::vector<std::unique_ptr<RegressionOracle>>& oracles,
                      const RoundInstance& instance, const CpbConfig& config,
                      int round);

/// Runs the driver over a full instance stream (length = horizon).
RegretTrace cpb_run(std::span<const RoundInstance> stream,
                    const CpbConfig& config);

}  // namespace pandora
