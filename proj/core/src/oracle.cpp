#include "pandora/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "pandora/loss.hpp"

namespace pandora {

double ftrl_eta(double norm_bound, double loss_cost, int horizon) {
  if (!(norm_bound > 0.0) || !(loss_cost > 0.0) || horizon < 1) {
    throw std::invalid_argument("ftrl_eta: need M > 0, c > 0, T >= 1");
  }
  return std::sqrt(norm_bound) /
         (std::max(loss_cost, norm_bound) * std::sqrt(2.0 * horizon));
}

int interval_size(int horizon, double loss_cost, double norm_bound) {
  if (!(norm_bound > 0.0) || !(loss_cost > 0.0) || horizon < 1) {
    throw std::invalid_argument("interval_size: need M > 0, c > 0, T >= 1");
  }
  const double lipschitz = std::max(norm_bound, loss_cost);
  const double raw = std::cbrt(horizon * loss_cost * loss_cost /
                               (2.0 * norm_bound * lipschitz * lipschitz));
  const long long k = std::llround(raw);
  if (k < 1) return 1;
  if (k > horizon) return horizon;
  return static_cast<int>(k);
}

double lq_ball_objective(std::span<const Sample> samples, double loss_cost,
                         double inv_eta, const Vec& w) {
  double obj = 0.5 * inv_eta * dot(w, w);
  for (const Sample& s : samples) {
    obj += lq_loss(dot(w, s.x) - s.y, loss_cost);
  }
  return obj;
}

Vec lq_ball_minimize(std::span<const Sample> samples, double loss_cost,
                     double inv_eta, double norm_bound, Vec warm_start,
                     std::vector<double>* objective_trace,
                     const PgdOptions& opts) {
  Vec w = std::move(warm_start);
  project_to_ball(w, norm_bound);
  if (samples.empty() && inv_eta == 0.0) {
    return w;  // objective identically zero
  }

  const double step =
      1.0 / (static_cast<double>(samples.size()) + std::max(inv_eta, 1e-300));
  const std::size_t dim = w.size();
  Vec grad(dim);
  Vec next(dim);
  if (objective_trace != nullptr) {
    objective_trace->push_back(lq_ball_objective(samples, loss_cost, inv_eta, w));
  }

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    for (std::size_t j = 0; j < dim; ++j) grad[j] = inv_eta * w[j];
    for (const Sample& s : samples) {
      const double g = lq_loss_grad(dot(w, s.x) - s.y, loss_cost);
      for (std::size_t j = 0; j < dim; ++j) grad[j] += g * s.x[j];
    }
    for (std::size_t j = 0; j < dim; ++j) next[j] = w[j] - step * grad[j];
    project_to_ball(next, norm_bound);

    double move = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = next[j] - w[j];
      move += d * d;
    }
    w.swap(next);
    if (objective_trace != nullptr) {
      objective_trace->push_back(
          lq_ball_objective(samples, loss_cost, inv_eta, w));
    }
    if (std::sqrt(move) <= opts.step_tol) break;
  }
  return w;
}

FtrlOracle::FtrlOracle(int dim, double norm_bound, double loss_cost, double eta)
    : dim_(dim),
      norm_bound_(norm_bound),
      loss_cost_(loss_cost),
      eta_(eta),
      current_w_(static_cast<std::size_t>(dim), 0.0) {
  if (dim < 1 || !(norm_bound > 0.0) || !(loss_cost > 0.0) || !(eta > 0.0)) {
    throw std::invalid_argument(
        "FtrlOracle: need dim >= 1, M > 0, c > 0, eta > 0");
  }
}

Vec FtrlOracle::predict(int /*round*/) {
  current_w_ = lq_ball_minimize(history_, loss_cost_, 1.0 / eta_, norm_bound_,
                                std::move(current_w_));
  return current_w_;
}

bool FtrlOracle::wants_feedback(int /*round*/) { return true; }

void FtrlOracle::update(const Vec& x, double y) {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("FtrlOracle::update: dimension mismatch");
  }
  if (norm2(x) > 1.0 + 1e-12) {
    throw std::invalid_argument("FtrlOracle::update: |x| exceeds 1");
  }
  history_.push_back(Sample{x, y});
}

CostlyFeedbackOracle::CostlyFeedbackOracle(
    std::unique_ptr<RegressionOracle> inner, int interval_len, int horizon,
    std::uint64_t seed)
    : inner_(std::move(inner)),
      interval_len_(interval_len),
      horizon_(horizon),
      rng_(seed) {
  if (inner_ == nullptr) {
    throw std::invalid_argument("CostlyFeedbackOracle: missing inner oracle");
  }
  if (horizon < 1 || interval_len < 1 || interval_len > horizon) {
    throw std::invalid_argument(
        "CostlyFeedbackOracle: need 1 <= interval_len <= horizon");
  }
}

void CostlyFeedbackOracle::advance_to(int round) {
  if (round < 0 || round >= horizon_) {
    throw std::invalid_argument("CostlyFeedbackOracle: round out of horizon");
  }
  if (round < interval_begin_ && interval_index_ >= 0) {
    throw std::invalid_argument("CostlyFeedbackOracle: rounds must not rewind");
  }
  while (interval_index_ < 0 || round >= interval_end_) {
    ++interval_index_;
    interval_begin_ = interval_index_ * interval_len_;
    interval_end_ = std::min(interval_begin_ + interval_len_, horizon_);
    // The trailing interval may be shorter but still samples one round.
    const int len = interval_end_ - interval_begin_;
    feedback_round_ =
        interval_begin_ + static_cast<int>(rng_.below(static_cast<std::uint64_t>(len)));
    interval_w_ = inner_->predict(interval_index_);
  }
}

Vec CostlyFeedbackOracle::predict(int round) {
  advance_to(round);
  return interval_w_;
}

bool CostlyFeedbackOracle::wants_feedback(int round) {
  advance_to(round);
  const bool wants = (round == feedback_round_);
  if (wants && round != last_counted_round_) {
    ++feedback_requests_;
    last_counted_round_ = round;
  }
  return wants;
}

void CostlyFeedbackOracle::update(const Vec& x, double y) {
  inner_->update(x, y);
}

}  // namespace pandora
