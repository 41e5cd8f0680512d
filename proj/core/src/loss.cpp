#include "pandora/loss.hpp"

#include <algorithm>

namespace pandora {

double lq_loss(double z, double c) {
  const double r = std::max(0.0, z);
  return 0.5 * r * r - c * z;
}

double lq_loss_grad(double z, double c) { return std::max(0.0, z) - c; }

double regression_loss(std::span<const double> w, std::span<const double> x,
                       double y, double c) {
  return lq_loss(dot(w, x) - y, c);
}

Vec regression_loss_grad(std::span<const double> w, std::span<const double> x,
                         double y, double c) {
  const double g = lq_loss_grad(dot(w, x) - y, c);
  Vec out(x.begin(), x.end());
  for (double& o : out) o *= g;
  return out;
}

}  // namespace pandora
