#include "pandora/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "pandora/env.hpp"
#include "pandora/loss.hpp"
#include "pandora/oracle.hpp"

namespace pandora::verify {

namespace {

Distribution random_discrete(Rng& rng, int max_support) {
  const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_support)));
  std::vector<DiscreteAtom> atoms(static_cast<std::size_t>(size));
  double total = 0.0;
  for (auto& a : atoms) {
    a.value = rng.uniform(0.0, 8.0);
    a.probability = rng.uniform(0.05, 1.0);
    total += a.probability;
  }
  for (auto& a : atoms) a.probability /= total;
  return Distribution::discrete(std::move(atoms));
}

std::vector<BoxSpec> random_instance(Rng& rng, int max_boxes, int max_support) {
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_boxes)));
  std::vector<BoxSpec> boxes;
  boxes.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    boxes.push_back(BoxSpec{rng.uniform(0.1, 1.5), random_discrete(rng, max_support)});
  }
  return boxes;
}

Vec optimal_sigmas(std::span<const BoxSpec> boxes) {
  Vec sigmas;
  sigmas.reserve(boxes.size());
  for (const BoxSpec& b : boxes) {
    sigmas.push_back(reservation_value(b.dist, b.cost));
  }
  return sigmas;
}

SuiteResult weitzman_optimality_suite(std::uint64_t seed) {
  SuiteResult result{"weitzman-optimality", 0, 0, 0.0, 1e-9};
  Rng rng(mix_seed(seed, 1));
  for (int i = 0; i < 200; ++i) {
    const auto boxes = random_instance(rng, 3, 3);
    const double residual =
        weitzman_optimality_residual(boxes, optimal_sigmas(boxes));
    ++result.cases;
    result.worst_residual = std::max(result.worst_residual, residual);
    if (residual > result.tolerance) ++result.failures;
  }
  return result;
}

SuiteResult reservation_roundtrip_suite(std::uint64_t seed) {
  SuiteResult result{"reservation-roundtrip", 0, 0, 0.0, 1e-9};
  Rng rng(mix_seed(seed, 2));
  for (int i = 0; i < 1000; ++i) {
    Distribution dist = Distribution::uniform(0.0, 1.0);
    switch (rng.below(3)) {
      case 0: {
        const double lo = rng.uniform(-5.0, 5.0);
        dist = Distribution::uniform(lo, lo + rng.uniform(0.0, 10.0));
        break;
      }
      case 1:
        dist = random_discrete(rng, 6);
        break;
      default: {
        std::vector<double> samples(1 + rng.below(50));
        for (double& s : samples) s = rng.uniform(-4.0, 8.0);
        dist = Distribution::empirical(std::move(samples));
        break;
      }
    }
    const double cost = rng.uniform(0.01, 3.0);
    const double sigma = reservation_value(dist, cost);
    const double residual = std::abs(approximate_cost(dist, sigma) - cost);
    ++result.cases;
    result.worst_residual = std::max(result.worst_residual, residual);
    if (residual > result.tolerance) ++result.failures;
  }
  return result;
}

SuiteResult robustness_suite(std::uint64_t seed) {
  SuiteResult result{"robustness", 0, 0, 0.0, 1e-9};
  Rng rng(mix_seed(seed, 3));
  for (int i = 0; i < 500; ++i) {
    const auto boxes = random_instance(rng, 4, 4);
    const Vec sigma_star = optimal_sigmas(boxes);
    Vec sigma_hat = sigma_star;
    for (double& s : sigma_hat) s += rng.uniform(-2.0, 2.0);
    const double violation = robustness_violation(boxes, sigma_star, sigma_hat);
    ++result.cases;
    result.worst_residual = std::max(result.worst_residual, violation);
    if (violation > result.tolerance) ++result.failures;
  }
  return result;
}

SuiteResult lq_lower_bound_suite(std::uint64_t seed) {
  SuiteResult result{"lq-lower-bound", 0, 0, 0.0, 1e-9};
  Rng rng(mix_seed(seed, 4));
  for (int i = 0; i < 500; ++i) {
    const Distribution dist = random_discrete(rng, 6);
    const double cost = rng.uniform(0.1, 1.5);
    const double sigma =
        reservation_value(dist, cost) + rng.uniform(-3.0, 3.0);
    const double violation = lq_lower_bound_violation(dist, cost, sigma);
    ++result.cases;
    result.worst_residual = std::max(result.worst_residual, violation);
    if (violation > result.tolerance) ++result.failures;
  }
  return result;
}

SuiteResult gradient_check_suite(std::uint64_t seed) {
  SuiteResult result{"gradient-check", 0, 0, 0.0, 1e-6};
  Rng rng(mix_seed(seed, 5));
  for (int i = 0; i < 1000; ++i) {
    const int dim = 1 + static_cast<int>(rng.below(6));
    Vec w;
    Vec x;
    double y = 0.0;
    double c = rng.uniform(0.1, 2.0);
    // Sample away from the loss kink so finite differences see a smooth
    // function.
    do {
      w = uniform_in_ball(dim, 3.0, rng);
      x = uniform_in_ball(dim, 1.0, rng);
      y = rng.uniform(-2.0, 6.0);
    } while (std::abs(dot(w, x) - y) <= 1e-3);
    const double err = gradient_check_rel_error(w, x, y, c);
    ++result.cases;
    result.worst_residual = std::max(result.worst_residual, err);
    if (err > result.tolerance) ++result.failures;
  }
  return result;
}

SuiteResult ftrl_regret_suite(std::uint64_t seed) {
  SuiteResult result{"ftrl-regret", 0, 0, 0.0, 0.0};
  constexpr int kSeeds = 50;
  constexpr int kHorizon = 300;
  constexpr double kNormBound = 4.0;
  constexpr double kCost = 1.0;
  const double bound = std::max(kNormBound, kCost) *
                       std::sqrt(2.0 * kNormBound * kHorizon);

  for (int s = 0; s < kSeeds; ++s) {
    EnvConfig env;
    env.n_boxes = 1;
    env.seed = mix_seed(mix_seed(seed, 6), static_cast<std::uint64_t>(s));
    const GroundTruth truth = make_ground_truth(env);

    FtrlOracle oracle(env.dim, kNormBound, kCost,
                      ftrl_eta(kNormBound, kCost, kHorizon));
    double online_loss = 0.0;
    Vec last_w;
    for (int t = 0; t < kHorizon; ++t) {
      const RoundInstance inst = generate_round(truth, env, t);
      const Vec w = oracle.predict(t);
      online_loss += regression_loss(w, inst.contexts[0], inst.realized_values[0], kCost);
      oracle.update(inst.contexts[0], inst.realized_values[0]);
      last_w = w;
    }

    PgdOptions opts;
    opts.max_iters = 20000;
    opts.step_tol = 1e-10;
    const Vec best = lq_ball_minimize(oracle.history(), kCost, 0.0, kNormBound,
                                      last_w, nullptr, opts);
    const double batch_loss =
        lq_ball_objective(oracle.history(), kCost, 0.0, best);

    const double regret = online_loss - batch_loss;
    ++result.cases;
    result.worst_residual = std::max(result.worst_residual, regret - bound);
    if (regret - bound > result.tolerance) ++result.failures;
  }
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "weitzman-optimality", "reservation-roundtrip", "robustness",
      "lq-lower-bound",      "gradient-check",        "ftrl-regret"};
  return names;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
  if (name == "weitzman-optimality") return weitzman_optimality_suite(seed);
  if (name == "reservation-roundtrip") return reservation_roundtrip_suite(seed);
  if (name == "robustness") return robustness_suite(seed);
  if (name == "lq-lower-bound") return lq_lower_bound_suite(seed);
  if (name == "gradient-check") return gradient_check_suite(seed);
  if (name == "ftrl-regret") return ftrl_regret_suite(seed);
  std::string accepted;
  for (const std::string& n : suite_names()) {
    accepted += accepted.empty() ? n : ", " + n;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "'; accepted: " + accepted + ", all");
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
  std::vector<SuiteResult> results;
  for (const std::string& name : suite_names()) {
    results.push_back(run_suite(name, seed));
  }
  return results;
}

double weitzman_optimality_residual(std::span<const BoxSpec> boxes,
                                    std::span<const double> sigmas) {
  return std::abs(expected_weitzman_cost_exact(boxes, sigmas) -
                  bruteforce_optimal_cost(boxes));
}

double robustness_violation(std::span<const BoxSpec> boxes,
                            std::span<const double> sigma_star,
                            std::span<const double> sigma_hat) {
  double l1 = 0.0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    l1 += std::abs(approximate_cost(boxes[i].dist, sigma_hat[i]) -
                   boxes[i].cost);
  }
  const double lhs = expected_weitzman_cost_exact(boxes, sigma_hat);
  const double rhs = expected_weitzman_cost_exact(boxes, sigma_star) + l1;
  return std::max(0.0, lhs - rhs);
}

double lq_lower_bound_violation(const Distribution& dist, double cost,
                                double sigma) {
  const auto* support = std::get_if<DiscreteSupport>(&dist.spec());
  if (support == nullptr) {
    throw std::invalid_argument(
        "lq_lower_bound_violation: distribution must be discrete");
  }
  const double sigma_star = reservation_value(dist, cost);
  double gap = 0.0;  // exact E[lq(sigma - v) - lq(sigma* - v)]
  for (const DiscreteAtom& a : support->atoms) {
    gap += a.probability *
           (lq_loss(sigma - a.value, cost) - lq_loss(sigma_star - a.value, cost));
  }
  const double diff =
      approximate_cost(dist, sigma) - approximate_cost(dist, sigma_star);
  return std::max(0.0, 0.5 * diff * diff - gap);
}

double gradient_check_rel_error(const Vec& w, const Vec& x, double y, double c) {
  constexpr double kStep = 1e-6;
  const Vec analytic = regression_loss_grad(w, x, y, c);
  Vec numeric(w.size());
  Vec probe = w;
  for (std::size_t j = 0; j < w.size(); ++j) {
    probe[j] = w[j] + kStep;
    const double up = regression_loss(probe, x, y, c);
    probe[j] = w[j] - kStep;
    const double down = regression_loss(probe, x, y, c);
    probe[j] = w[j];
    numeric[j] = (up - down) / (2.0 * kStep);
  }
  double diff2 = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double d = analytic[j] - numeric[j];
    diff2 += d * d;
  }
  return std::sqrt(diff2) / std::max(1.0, norm2(numeric));
}

}  // namespace pandora::verify
