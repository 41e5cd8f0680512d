#pragma once

#include <span>

#include "pandora/linalg.hpp"

namespace pandora {

/// Linear-quadratic loss 0.5*ReLU(z)^2 - c*z on the residual z. Convex in z;
/// its expectation over v ~ D of z = sigma - v is minimized exactly at the
/// reservation value of D for cost c.
double lq_loss(double z, double c);

/// Derivative ReLU(z) - c. At the kink z = 0 the ReLU term is taken as 0,
/// so lq_loss_grad(0, c) = -c; any subgradient choice is valid, a fixed one
/// keeps solver trajectories deterministic.
double lq_loss_grad(double z, double c);

/// lq_loss applied to the linear-prediction residual <w, x> - y.
double regression_loss(std::span<const double> w, std::span<const double> x,
                       double y, double c);

/// Gradient in w: lq_loss_grad(<w, x> - y, c) * x.
Vec regression_loss_grad(std::span<const double> w, std::span<const double> x,
                         double y, double c);

}  // namespace pandora
