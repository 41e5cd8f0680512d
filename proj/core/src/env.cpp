#include "pandora/env.hpp"

#include <cmath>
#include <stdexcept>

namespace pandora {

namespace {

constexpr std::uint64_t kTruthStream = 0x77737461725f3031ULL;
constexpr std::uint64_t kRoundStream = 0x656e765f726e6430ULL;
constexpr int kMaxResamples = 10000;

}  // namespace

void EnvConfig::validate() const {
  if (n_boxes < 1) throw std::invalid_argument("EnvConfig: n_boxes must be >= 1");
  if (dim < 1) throw std::invalid_argument("EnvConfig: dim must be >= 1");
  if (horizon < 1) throw std::invalid_argument("EnvConfig: horizon must be >= 1");
  if (!(cost > 0.0)) throw std::invalid_argument("EnvConfig: cost must be positive");
  if (!(norm_bound > 0.0)) {
    throw std::invalid_argument("EnvConfig: norm_bound must be positive");
  }
  if (!(sigma_margin > 0.0)) {
    throw std::invalid_argument("EnvConfig: sigma_margin must be positive");
  }
}

Vec sample_wstar(int dim, double norm_bound, Rng& rng) {
  if (dim < 1 || !(norm_bound > 0.0)) {
    throw std::invalid_argument("sample_wstar: need dim >= 1 and M > 0");
  }
  return uniform_in_ball(dim, norm_bound, rng);
}

double uniform_bound_for_target(double sigma, double cost) {
  if (!(cost > 0.0)) {
    throw std::invalid_argument("uniform_bound_for_target: cost must be positive");
  }
  if (!(sigma > cost)) {
    throw std::invalid_argument(
        "uniform_bound_for_target: sigma must exceed cost (shortfall of a "
        "nonnegative value is below ReLU(sigma) < cost otherwise)");
  }
  if (sigma >= 2.0 * cost) {
    return sigma * sigma / (2.0 * cost);  // regime sigma <= B
  }
  return 2.0 * (sigma - cost);  // regime sigma >= B
}

GroundTruth make_ground_truth(const EnvConfig& config) {
  config.validate();
  const double min_norm = config.cost + config.sigma_margin;
  if (config.norm_bound < min_norm) {
    throw std::runtime_error(
        "make_ground_truth: norm_bound below cost + sigma_margin, no feasible "
        "weight vector exists");
  }
  Rng rng(mix_seed(config.seed, kTruthStream));
  GroundTruth truth;
  truth.wstar.reserve(static_cast<std::size_t>(config.n_boxes));
  for (int i = 0; i < config.n_boxes; ++i) {
    Vec w;
    int draws = 0;
    do {
      if (++draws > kMaxResamples) {
        throw std::runtime_error(
            "make_ground_truth: could not draw a feasible weight vector");
      }
      w = sample_wstar(config.dim, config.norm_bound, rng);
    } while (norm2(w) < min_norm);
    truth.wstar.push_back(std::move(w));
  }
  return truth;
}

RoundInstance generate_round(const GroundTruth& truth, const EnvConfig& config,
                             int round) {
  if (static_cast<int>(truth.wstar.size()) != config.n_boxes) {
    throw std::invalid_argument("generate_round: truth/config mismatch");
  }
  Rng rng(mix_seed(mix_seed(config.seed, kRoundStream),
                   static_cast<std::uint64_t>(round)));
  const double sigma_floor = config.cost + config.sigma_margin;

  RoundInstance instance;
  const std::size_t n = truth.wstar.size();
  instance.contexts.reserve(n);
  instance.realized_values.reserve(n);
  instance.true_sigmas.reserve(n);
  instance.dists.reserve(n);

  for (const Vec& w : truth.wstar) {
    Vec x;
    double sigma = 0.0;
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
      x = uniform_in_ball(config.dim, 1.0, rng);
      sigma = dot(w, x);
      if (sigma >= sigma_floor) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // Deterministic fallback along w*; feasibility of the ground truth
      // (|w*| >= cost + margin) keeps it inside the unit ball.
      const double scale = sigma_floor / dot(w, w);
      x = w;
      for (double& xi : x) xi *= scale;
      if (norm2(x) > 1.0) {
        throw std::runtime_error("generate_round: infeasible ground truth");
      }
      sigma = sigma_floor;
    }

    const double bound = uniform_bound_for_target(sigma, config.cost);
    instance.contexts.push_back(std::move(x));
    instance.true_sigmas.push_back(sigma);
    instance.realized_values.push_back(rng.uniform(0.0, bound));
    instance.dists.push_back(Distribution::uniform(0.0, bound));
  }
  return instance;
}

std::vector<RoundInstance> generate_stream(const GroundTruth& truth,
                                           const EnvConfig& config) {
  std::vector<RoundInstance> stream;
  stream.reserve(static_cast<std::size_t>(config.horizon));
  for (int t = 0; t < config.horizon; ++t) {
    stream.push_back(generate_round(truth, config, t));
  }
  return stream;
}

RidgeRegression::RidgeRegression(int dim, double ridge)
    : dim_(dim), ridge_(ridge), xtx_(static_cast<std::size_t>(dim) * dim, 0.0),
      xtv_(static_cast<std::size_t>(dim), 0.0) {
  if (dim < 1 || !(ridge > 0.0)) {
    throw std::invalid_argument("RidgeRegression: need dim >= 1 and ridge > 0");
  }
}

void RidgeRegression::update(const Vec& x, double v) {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("RidgeRegression::update: dimension mismatch");
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      xtx_[static_cast<std::size_t>(i) * dim_ + j] += x[i] * x[j];
    }
    xtv_[static_cast<std::size_t>(i)] += x[i] * v;
  }
  ++observations_;
}

Vec RidgeRegression::coefficients() const {
  if (observations_ == 0) return Vec(static_cast<std::size_t>(dim_), 0.0);
  return ridge_cholesky_solve(xtx_, xtv_, static_cast<std::size_t>(dim_), ridge_);
}

double RidgeRegression::predict(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("RidgeRegression::predict: dimension mismatch");
  }
  if (observations_ == 0) return 0.0;
  return dot(coefficients(), x);
}

RegretTrace baseline_run(std::span<const RoundInstance> stream,
                         const CpbConfig& config) {
  config.validate();
  if (static_cast<int>(stream.size()) != config.horizon) {
    throw std::invalid_argument("baseline_run: stream length must equal horizon");
  }

  std::vector<RidgeRegression> models(
      static_cast<std::size_t>(config.n_boxes), RidgeRegression(config.dim));
  RegretTrace trace;
  Vec sigmas(static_cast<std::size_t>(config.n_boxes));

  for (int t = 0; t < config.horizon; ++t) {
    const RoundInstance& instance = stream[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < models.size(); ++i) {
      sigmas[i] = models[i].predict(instance.contexts[i]);
    }
    const WeitzmanOutcome outcome =
        weitzman_run(config.costs, sigmas, instance.realized_values);

    if (config.feedback == FeedbackMode::full) {
      for (std::size_t i = 0; i < models.size(); ++i) {
        models[i].update(instance.contexts[i], instance.realized_values[i]);
      }
    } else {
      for (std::size_t box : outcome.opened) {
        models[box].update(instance.contexts[box],
                           instance.realized_values[box]);
      }
    }

    const double opt = weitzman_run(config.costs, instance.true_sigmas,
                                    instance.realized_values)
                           .total_cost;
    trace.append(outcome.total_cost, opt);
  }
  return trace;
}

}  // namespace pandora
