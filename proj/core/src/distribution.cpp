#include "pandora/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pandora {

namespace {

bool all_finite(const std::vector<double>& xs) {
  return std::all_of(xs.begin(), xs.end(),
                     [](double x) { return std::isfinite(x); });
}

}  // namespace

Distribution Distribution::uniform(double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw std::invalid_argument("uniform distribution: bounds must be finite");
  }
  if (lower > upper) {
    throw std::invalid_argument("uniform distribution: lower > upper");
  }
  return Distribution(UniformInterval{lower, upper});
}

Distribution Distribution::discrete(std::vector<DiscreteAtom> atoms) {
  if (atoms.empty()) {
    throw std::invalid_argument("discrete distribution: empty support");
  }
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!std::isfinite(a.value)) {
      throw std::invalid_argument("discrete distribution: non-finite value");
    }
    if (!(a.probability > 0.0) || !std::isfinite(a.probability)) {
      throw std::invalid_argument(
          "discrete distribution: probabilities must be strictly positive");
    }
    total += a.probability;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "discrete distribution: probabilities must sum to 1 within 1e-12");
  }
  return Distribution(DiscreteSupport{std::move(atoms)});
}

Distribution Distribution::empirical(std::vector<double> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("empirical distribution: no samples");
  }
  if (!all_finite(samples)) {
    throw std::invalid_argument("empirical distribution: non-finite sample");
  }
  return Distribution(EmpiricalSample{std::move(samples)});
}

bool Distribution::is_discrete() const {
  return std::holds_alternative<DiscreteSupport>(spec_);
}

double Distribution::min_value() const {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformInterval>) {
          return s.lower;
        } else if constexpr (std::is_same_v<T, DiscreteSupport>) {
          double m = s.atoms.front().value;
          for (const auto& a : s.atoms) m = std::min(m, a.value);
          return m;
        } else {
          return *std::min_element(s.samples.begin(), s.samples.end());
        }
      },
      spec_);
}

double Distribution::sample(Rng& rng) const {
  return std::visit(
      [&rng](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformInterval>) {
          return rng.uniform(s.lower, s.upper);
        } else if constexpr (std::is_same_v<T, DiscreteSupport>) {
          double u = rng.uniform01();
          for (const auto& a : s.atoms) {
            if (u < a.probability) return a.value;
            u -= a.probability;
          }
          return s.atoms.back().value;  // guard against rounding in the cdf walk
        } else {
          return s.samples[rng.below(s.samples.size())];
        }
      },
      spec_);
}

double approximate_cost(const Distribution& dist, double sigma) {
  return std::visit(
      [sigma](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformInterval>) {
          const double w = s.upper - s.lower;
          if (sigma <= s.lower) return 0.0;
          if (w == 0.0) return sigma - s.lower;  // point mass
          if (sigma >= s.upper) return sigma - 0.5 * (s.lower + s.upper);
          const double d = sigma - s.lower;
          return 0.5 * d * d / w;
        } else if constexpr (std::is_same_v<T, DiscreteSupport>) {
          double c = 0.0;
          for (const auto& a : s.atoms) {
            c += a.probability * std::max(0.0, sigma - a.value);
          }
          return c;
        } else {
          double c = 0.0;
          for (double v : s.samples) c += std::max(0.0, sigma - v);
          return c / static_cast<double>(s.samples.size());
        }
      },
      dist.spec());
}

double reservation_value(const Distribution& dist, double cost) {
  if (!(cost > 0.0)) {
    throw std::invalid_argument("reservation_value: cost must be positive");
  }

  // Below the support minimum the shortfall is exactly zero, which gives a
  // free lower bracket; expand upward until the shortfall reaches the cost.
  double lo = dist.min_value();
  double hi = lo;
  double step = 1.0;
  int doublings = 0;
  while (!(approximate_cost(dist, hi) >= cost)) {
    if (++doublings > 200) {
      throw std::runtime_error(
          "reservation_value: bracket expansion failed (non-finite input?)");
    }
    hi += step;
    step *= 2.0;
  }

  // Bisect on the predicate cost(sigma) >= cost, which converges to the
  // infimum root; 1-Lipschitzness turns the final sigma gap into a cost
  // residual bound. 200 halvings drive the bracket to fp resolution.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (approximate_cost(dist, mid) >= cost) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace pandora
