#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pandora {

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);

double norm2(std::span<const double> a);

/// Radial rescaling of w onto the closed ball of the given radius.
void project_to_ball(Vec& w, double radius);

/// Solves (A + ridge*I) x = b by Cholesky factorization. A is a dense
/// row-major dim*dim symmetric matrix; ridge must make it positive definite.
Vec ridge_cholesky_solve(std::vector<double> a, std::span<const double> b,
                         std::size_t dim, double ridge);

}  // namespace pandora
