#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pandora/linalg.hpp"
#include "pandora/rng.hpp"

namespace pandora {

struct Sample {
  Vec x;
  double y = 0.0;
};

/// Prediction/update contract shared by all online-regression oracles.
/// Within a round the driver calls predict first, then wants_feedback, then
/// update at most once. Rounds are zero-based and non-decreasing.
/// An oracle instance is single-writer; distinct instances may run in
/// parallel and instances are transferable between threads after
/// construction.
class RegressionOracle {
 public:
  virtual ~RegressionOracle() = default;
  virtual Vec predict(int round) = 0;
  virtual bool wants_feedback(int round) = 0;
  virtual void update(const Vec& x, double y) = 0;
};

/// Regularizer scale for the FTRL oracle: sqrt(M) / (max{c, M} * sqrt(2T)).
double ftrl_eta(double norm_bound, double loss_cost, int horizon);

/// Interval length for the costly-feedback wrapper:
/// round((T c^2 / (2 M max{M,c}^2))^(1/3)) clamped into [1, T].
int interval_size(int horizon, double loss_cost, double norm_bound);

struct PgdOptions {
  int max_iters = 10000;
  double step_tol = 1e-8;
};

/// Minimizes sum_i lq_loss(<w, x_i> - y_i, c) + 0.5 * inv_eta * |w|^2 over
/// the ball |w| <= norm_bound by projected gradient descent from warm_start.
/// The step size 1/(n + inv_eta) upper-bounds the smoothness constant
/// (each sample contributes at most x x^T with |x| <= 1), so the objective
/// decreases monotonically; iteration stops when the projected step norm
/// falls below step_tol. Pass inv_eta = 0 for the unregularized batch
/// minimum. objective_trace, when given, records the objective value at
/// every iterate.
Vec lq_ball_minimize(std::span<const Sample> samples, double loss_cost,
                     double inv_eta, double norm_bound, Vec warm_start,
                     std::vector<double>* objective_trace = nullptr,
                     const PgdOptions& opts = {});

/// Objective value used by lq_ball_minimize.
double lq_ball_objective(std::span<const Sample> samples, double loss_cost,
                         double inv_eta, const Vec& w);

/// Follow-the-regularized-leader oracle for linear predictions under the
/// linear-quadratic loss: each prediction is the minimizer of the cumulative
/// past loss plus the regularizer |w|^2 / (2 eta) over the ball |w| <= M.
/// Deterministic; always wants feedback.
class FtrlOracle final : public RegressionOracle {
 public:
  FtrlOracle(int dim, double norm_bound, double loss_cost, double eta);

  Vec predict(int round) override;
  bool wants_feedback(int round) override;
  void update(const Vec& x, double y) override;  // requires |x| <= 1

  const std::vector<Sample>& history() const { return history_; }
  double norm_bound() const { return norm_bound_; }
  double loss_cost() const { return loss_cost_; }
  double eta() const { return eta_; }

 private:
  int dim_;
  double norm_bound_;
  double loss_cost_;
  double eta_;
  std::vector<Sample> history_;
  Vec current_w_;  // warm start carried across predictions
};

/// Costly-feedback oracle built on a full-information oracle: the horizon is
/// split into intervals of the given length (the last interval may be
/// shorter), the inner prediction is computed once per interval and reused
/// for all of its rounds, and exactly one uniformly random round per
/// interval is flagged for feedback. Randomness comes solely from the seed.
class CostlyFeedbackOracle final : public RegressionOracle {
 public:
  CostlyFeedbackOracle(std::unique_ptr<RegressionOracle> inner,
                       int interval_len, int horizon, std::uint64_t seed);

  Vec predict(int round) override;
  bool wants_feedback(int round) override;
  void update(const Vec& x, double y) override;

  int feedback_requests_made() const { return feedback_requests_; }

 private:
  void advance_to(int round);

  std::unique_ptr<RegressionOracle> inner_;
  int interval_len_;
  int horizon_;
  Rng rng_;
  int interval_index_ = -1;    // current interval, -1 before the first round
  int interval_begin_ = 0;
  int interval_end_ = 0;       // one past the last round of the interval
  int feedback_round_ = -1;    // the sampled round of the current interval
  Vec interval_w_;
  int feedback_requests_ = 0;
  int last_counted_round_ = -1;
};

}  // namespace pandora
