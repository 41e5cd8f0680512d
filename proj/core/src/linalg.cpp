#include "pandora/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "pandora/rng.hpp"

namespace pandora {

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void project_to_ball(Vec& w, double radius) {
  const double n = norm2(w);
  if (n > radius) {
    const double f = radius / n;
    for (double& wi : w) wi *= f;
  }
}

Vec ridge_cholesky_solve(std::vector<double> a, std::span<const double> b,
                         std::size_t dim, double ridge) {
  if (a.size() != dim * dim || b.size() != dim) {
    throw std::invalid_argument("ridge_cholesky_solve: dimension mismatch");
  }
  for (std::size_t i = 0; i < dim; ++i) a[i * dim + i] += ridge;

  // In-place lower-triangular Cholesky.
  for (std::size_t j = 0; j < dim; ++j) {
    double d = a[j * dim + j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j * dim + k] * a[j * dim + k];
    if (d <= 0.0) {
      throw std::runtime_error("ridge_cholesky_solve: matrix not positive definite");
    }
    const double ljj = std::sqrt(d);
    a[j * dim + j] = ljj;
    for (std::size_t i = j + 1; i < dim; ++i) {
      double s = a[i * dim + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i * dim + k] * a[j * dim + k];
      a[i * dim + j] = s / ljj;
    }
  }

  // Forward then backward substitution.
  Vec x(b.begin(), b.end());
  for (std::size_t i = 0; i < dim; ++i) {
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= a[i * dim + k] * x[k];
    x[i] = s / a[i * dim + i];
  }
  for (std::size_t ii = dim; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t k = ii + 1; k < dim; ++k) s -= a[k * dim + ii] * x[k];
    x[ii] = s / a[ii * dim + ii];
  }
  return x;
}

Vec uniform_in_ball(int dim, double radius, Rng& rng) {
  Vec x(static_cast<std::size_t>(dim));
  double n = 0.0;
  do {
    for (double& xi : x) xi = rng.normal();
    n = norm2(x);
  } while (n == 0.0);
  const double r = radius * std::pow(rng.uniform01(), 1.0 / dim);
  for (double& xi : x) xi *= r / n;
  return x;
}

}  // namespace pandora
