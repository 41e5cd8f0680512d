#pragma once

#include <variant>
#include <vector>

#include "pandora/rng.hpp"

namespace pandora {

struct UniformInterval {
  double lower = 0.0;
  double upper = 1.0;
};

struct DiscreteAtom {
  double value = 0.0;
  double probability = 1.0;
};

struct DiscreteSupport {
  std::vector<DiscreteAtom> atoms;
};

struct EmpiricalSample {
  std::vector<double> samples;
};

/// Value distribution of a box: uniform on an interval, finite discrete, or
/// an empirical sample list. Construct through the factories, which validate
/// the variant invariants (finite values, positive probabilities summing to
/// one, non-empty samples).
class Distribution {
 public:
  using Spec = std::variant<UniformInterval, DiscreteSupport, EmpiricalSample>;

  static Distribution uniform(double lower, double upper);
  static Distribution discrete(std::vector<DiscreteAtom> atoms);
  static Distribution empirical(std::vector<double> samples);

  const Spec& spec() const { return spec_; }
  bool is_discrete() const;

  /// Smallest value in the support.
  double min_value() const;

  double sample(Rng& rng) const;

 private:
  explicit Distribution(Spec spec) : spec_(std::move(spec)) {}
  Spec spec_;
};

/// Expected shortfall E[max(0, sigma - v)] of the distribution at sigma:
/// the opening cost that the threshold sigma implements. Closed form for
/// uniform and discrete variants, plug-in sample average for empirical ones.
/// Nonnegative, nondecreasing and 1-Lipschitz in sigma.
double approximate_cost(const Distribution& dist, double sigma);

/// Solves approximate_cost(dist, sigma) = cost for sigma. The shortfall is
/// continuous and nondecreasing with limits 0 and +inf, so a root exists for
/// every cost > 0; where the equation has a flat segment of solutions the
/// infimum is returned. Bisection after exponential bracket expansion; the
/// returned sigma has cost residual at most 1e-9. Throws if the bracket
/// fails to close within 200 doublings (non-finite inputs).
double reservation_value(const Distribution& dist, double cost);

}  // namespace pandora
