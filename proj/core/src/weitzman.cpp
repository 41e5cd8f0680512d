#include "pandora/weitzman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pandora {

WeitzmanOutcome weitzman_run(std::span<const double> costs,
                             std::span<const double> sigmas,
                             std::span<const double> values) {
  const std::size_t n = costs.size();
  if (n == 0) {
    throw std::invalid_argument("weitzman_run: no boxes");
  }
  if (sigmas.size() != n || values.size() != n) {
    throw std::invalid_argument("weitzman_run: mismatched list lengths");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sigmas[a] < sigmas[b];
  });

  WeitzmanOutcome out;
  double v_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t box = order[i];
    out.opened.push_back(box);
    out.open_cost_paid += costs[box];
    v_min = std::min(v_min, values[box]);
    const double next_sigma = (i + 1 < n)
                                  ? sigmas[order[i + 1]]
                                  : std::numeric_limits<double>::infinity();
    if (v_min < next_sigma) break;  // strict: ties keep opening
  }
  out.selected_value = v_min;
  out.total_cost = out.selected_value + out.open_cost_paid;
  return out;
}

namespace {

const std::vector<DiscreteAtom>& discrete_atoms(const BoxSpec& box,
                                                const char* caller) {
  const auto* support = std::get_if<DiscreteSupport>(&box.dist.spec());
  if (support == nullptr) {
    throw std::invalid_argument(std::string(caller) +
                                ": all distributions must be discrete");
  }
  return support->atoms;
}

}  // namespace

double expected_weitzman_cost_exact(std::span<const BoxSpec> boxes,
                                    std::span<const double> sigmas) {
  const std::size_t n = boxes.size();
  if (n == 0 || sigmas.size() != n) {
    throw std::invalid_argument(
        "expected_weitzman_cost_exact: mismatched list lengths");
  }

  std::vector<const std::vector<DiscreteAtom>*> supports(n);
  double combos = 1.0;
  std::vector<double> costs(n);
  for (std::size_t i = 0; i < n; ++i) {
    supports[i] = &discrete_atoms(boxes[i], "expected_weitzman_cost_exact");
    combos *= static_cast<double>(supports[i]->size());
    costs[i] = boxes[i].cost;
  }
  if (combos > 1e6) {
    throw std::runtime_error(
        "expected_weitzman_cost_exact: enumeration budget exceeded");
  }

  // Odometer over the product of supports.
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> values(n);
  double expectation = 0.0;
  while (true) {
    double prob = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const DiscreteAtom& atom = (*supports[i])[idx[i]];
      values[i] = atom.value;
      prob *= atom.probability;
    }
    expectation += prob * weitzman_run(costs, sigmas, values).total_cost;

    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == supports[pos]->size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return expectation;
}

namespace {

// State-space solver for the optimal adaptive policy. The "best value so
// far" component only ever takes support values (or +inf before any box is
// opened), so states are (opened mask, index into the sorted value list).
class AdaptivePolicySolver {
 public:
  explicit AdaptivePolicySolver(std::span<const BoxSpec> boxes) : n_(boxes.size()) {
    std::vector<double> all_values;
    for (const BoxSpec& box : boxes) {
      const auto& atoms = discrete_atoms(box, "bruteforce_optimal_cost");
      if (n_ > 4 || atoms.size() > 4) {
        throw std::runtime_error("bruteforce_optimal_cost: budget exceeded");
      }
      for (const auto& a : atoms) all_values.push_back(a.value);
    }
    std::sort(all_values.begin(), all_values.end());
    all_values.erase(std::unique(all_values.begin(), all_values.end()),
                     all_values.end());
    values_ = std::move(all_values);

    costs_.reserve(n_);
    atom_probs_.resize(n_);
    atom_value_ids_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const BoxSpec& box = boxes[i];
      costs_.push_back(box.cost);
      for (const auto& a : discrete_atoms(box, "bruteforce_optimal_cost")) {
        const auto it =
            std::lower_bound(values_.begin(), values_.end(), a.value);
        atom_value_ids_[i].push_back(
            static_cast<std::size_t>(it - values_.begin()));
        atom_probs_[i].push_back(a.probability);
      }
    }
    const std::size_t inf_id = values_.size();
    memo_.assign((std::size_t{1} << n_) * (inf_id + 1),
                 std::numeric_limits<double>::quiet_NaN());
  }

  double solve() { return value(0, values_.size()); }

 private:
  double value(std::size_t mask, std::size_t best_id) {
    double& slot = memo_[mask * (values_.size() + 1) + best_id];
    if (!std::isnan(slot)) return slot;

    // Stop branch: keep the best value found, only legal once a box is open.
    double best = (mask != 0) ? value_at(best_id)
                              : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i) {
      if (mask & (std::size_t{1} << i)) continue;
      double expect = costs_[i];
      for (std::size_t k = 0; k < atom_probs_[i].size(); ++k) {
        const std::size_t next_best = std::min(best_id, atom_value_ids_[i][k]);
        expect += atom_probs_[i][k] *
                  value(mask | (std::size_t{1} << i), next_best);
      }
      best = std::min(best, expect);
    }
    slot = best;
    return best;
  }

  double value_at(std::size_t id) const {
    return id < values_.size() ? values_[id]
                               : std::numeric_limits<double>::infinity();
  }

  std::size_t n_;
  std::vector<double> values_;  // sorted unique support values
  std::vector<double> costs_;
  std::vector<std::vector<double>> atom_probs_;
  std::vector<std::vector<std::size_t>> atom_value_ids_;
  std::vector<double> memo_;
};

}  // namespace

double bruteforce_optimal_cost(std::span<const BoxSpec> boxes) {
  if (boxes.empty()) {
    throw std::invalid_argument("bruteforce_optimal_cost: no boxes");
  }
  return AdaptivePolicySolver(boxes).solve();
}

}  // namespace pandora
