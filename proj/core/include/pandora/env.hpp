#pragma once

#include <cstdint>
#include <vector>

#include "pandora/cpb.hpp"
#include "pandora/linalg.hpp"
#include "pandora/rng.hpp"

namespace pandora {

/// Synthetic-environment parameters. Each box has a fixed hidden weight
/// vector; per round a context is drawn on the unit ball so that the induced
/// target reservation value exceeds the cost by at least sigma_margin, and
/// the box value is uniform on [0, B] with B chosen so that the target is
/// exactly the distribution's reservation value.
struct EnvConfig {
  int n_boxes = 10;
  int dim = 5;
  int horizon = 300;
  double cost = 1.0;        // shared opening cost
  double norm_bound = 4.0;  // bound M on |w*| and on learner predictions
  double sigma_margin = 0.1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct GroundTruth {
  std::vector<Vec> wstar;  // one hidden weight vector per box, |w*| <= M
};

/// Uniform draw from the ball of radius norm_bound: uniform direction,
/// radius M * U^(1/d).
Vec sample_wstar(int dim, double norm_bound, Rng& rng);

/// Right endpoint B such that Uniform[0, B] has reservation value sigma at
/// the given cost: sigma^2 / (2c) when sigma >= 2c, 2(sigma - c) when
/// c < sigma < 2c (the branches agree at sigma = 2c). Throws for
/// sigma <= c, which no Uniform[0, B] can attain.
double uniform_bound_for_target(double sigma, double cost);

/// Draws per-box weight vectors, resampling any that are too short for the
/// context generator's fallback to stay on the unit ball (|w*| >= c + margin).
GroundTruth make_ground_truth(const EnvConfig& config);

/// Generates one round. Contexts are drawn uniformly on the unit ball and
/// resampled until <w*, x> >= cost + margin (after 10,000 rejections the
/// deterministic fallback x = (cost+margin)/|w*|^2 * w* is used). Pure in
/// (config.seed, config, round).
RoundInstance generate_round(const GroundTruth& truth, const EnvConfig& config,
                             int round);

std::vector<RoundInstance> generate_stream(const GroundTruth& truth,
                                           const EnvConfig& config);

/// Ordinary least squares of observed values on contexts, stabilized with a
/// tiny ridge term against early-round rank deficiency. Prediction with no
/// observations is 0.
class RidgeRegression {
 public:
  explicit RidgeRegression(int dim, double ridge = 1e-8);

  void update(const Vec& x, double v);
  double predict(const Vec& x) const;
  Vec coefficients() const;
  int observations() const { return observations_; }

 private:
  int dim_;
  double ridge_;
  std::vector<double> xtx_;  // dim * dim, row-major
  Vec xtv_;
  int observations_ = 0;
};

/// Plays the same rounds as the CPB driver but predicts each box's
/// reservation value with per-box least squares on (context, value) pairs.
/// Full mode observes every box's value each round; bandit mode observes
/// only boxes its own play opened, and makes no exploratory openings.
RegretTrace baseline_run(std::span<const RoundInstance> stream,
                         const CpbConfig& config);

}  // namespace pandora
