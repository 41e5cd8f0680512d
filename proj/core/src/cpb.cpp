#include "pandora/cpb.hpp"

#include <stdexcept>

namespace pandora {

void CpbConfig::validate() const {
  if (n_boxes < 1) throw std::invalid_argument("CpbConfig: n_boxes must be >= 1");
  if (dim < 1) throw std::invalid_argument("CpbConfig: dim must be >= 1");
  if (horizon < 1) throw std::invalid_argument("CpbConfig: horizon must be >= 1");
  if (static_cast<int>(costs.size()) != n_boxes) {
    throw std::invalid_argument("CpbConfig: costs must have one entry per box");
  }
  for (double c : costs) {
    if (!(c > 0.0)) throw std::invalid_argument("CpbConfig: costs must be positive");
  }
  if (!(norm_bound > 0.0)) {
    throw std::invalid_argument("CpbConfig: norm_bound must be positive");
  }
}

void RegretTrace::append(double round, double opt) {
  round_cost.push_back(round);
  opt_cost.push_back(opt);
  const double prev_algo = cum_algo_cost.empty() ? 0.0 : cum_algo_cost.back();
  const double prev_opt = cum_opt_cost.empty() ? 0.0 : cum_opt_cost.back();
  cum_algo_cost.push_back(prev_algo + round);
  cum_opt_cost.push_back(prev_opt + opt);
  cum_regret.push_back(cum_algo_cost.back() - cum_opt_cost.back());
}

std::vector<std::unique_ptr<RegressionOracle>> make_cpb_oracles(
    const CpbConfig& config) {
  config.validate();
  std::vector<std::unique_ptr<RegressionOracle>> oracles;
  oracles.reserve(config.costs.size());
  for (std::size_t i = 0; i < config.costs.size(); ++i) {
    const double cost = config.costs[i];
    auto ftrl = std::make_unique<FtrlOracle>(
        config.dim, config.norm_bound, cost,
        ftrl_eta(config.norm_bound, cost, config.horizon));
    if (config.feedback == FeedbackMode::bandit) {
      oracles.push_back(std::make_unique<CostlyFeedbackOracle>(
          std::move(ftrl), interval_size(config.horizon, cost, config.norm_bound),
          config.horizon, mix_seed(config.seed, i)));
    } else {
      oracles.push_back(std::move(ftrl));
    }
  }
  return oracles;
}

RoundResult cpb_round(std::vector<std::unique_ptr<RegressionOracle>>& oracles,
                      const RoundInstance& instance, const CpbConfig& config,
                      int round) {
  const std::size_t n = static_cast<std::size_t>(config.n_boxes);
  if (oracles.size() != n || instance.contexts.size() != n ||
      instance.realized_values.size() != n || instance.true_sigmas.size() != n) {
    throw std::invalid_argument("cpb_round: oracle/instance dimension mismatch");
  }
  for (const Vec& x : instance.contexts) {
    if (static_cast<int>(x.size()) != config.dim) {
      throw std::invalid_argument("cpb_round: context dimension mismatch");
    }
  }

  RoundResult result;

  // Prediction phase.
  result.predicted_sigmas.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec w = oracles[i]->predict(round);
    result.predicted_sigmas[i] = dot(w, instance.contexts[i]);
  }
  result.outcome = weitzman_run(config.costs, result.predicted_sigmas,
                                instance.realized_values);

  // Update phase.
  if (config.feedback == FeedbackMode::full) {
    for (std::size_t i = 0; i < n; ++i) {
      oracles[i]->update(instance.contexts[i], instance.realized_values[i]);
    }
  } else {
    std::vector<bool> opened(n, false);
    for (std::size_t box : result.outcome.opened) opened[box] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!oracles[i]->wants_feedback(round)) continue;
      if (!opened[i]) {
        result.extra_open_cost += config.costs[i];
      }
      oracles[i]->update(instance.contexts[i], instance.realized_values[i]);
    }
  }

  result.round_cost = result.outcome.total_cost + result.extra_open_cost;
  result.opt_cost = weitzman_run(config.costs, instance.true_sigmas,
                                 instance.realized_values)
                        .total_cost;
  return result;
}

RegretTrace cpb_run(std::span<const RoundInstance> stream,
                    const CpbConfig& config) {
  config.validate();
  if (static_cast<int>(stream.size()) != config.horizon) {
    throw std::invalid_argument("cpb_run: stream length must equal horizon");
  }
  auto oracles = make_cpb_oracles(config);
  RegretTrace trace;
  for (int t = 0; t < config.horizon; ++t) {
    const RoundResult r = cpb_round(oracles, stream[t], config, t);
    trace.append(r.round_cost, r.opt_cost);
  }
  return trace;
}

}  // namespace pandora
