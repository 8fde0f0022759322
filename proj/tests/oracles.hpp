// Test-only oracles, deliberately independent of the library's quadrature
// and gradient code paths.
#pragma once

#include "l2geo/path_energy.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace oracle {

// Composite Simpson rule with `panels` subintervals (panels must be even).
template <typename F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

// Central finite differences of discrete_energy over every interior
// coordinate, matching the layout of energy_gradient.
inline std::vector<l2geo::Vector> fd_energy_gradient(const l2geo::DiscretePath& path,
                                                     const l2geo::MetricSpec& metric,
                                                     double h) {
  std::vector<l2geo::Vector> grad;
  const int m = path.segment_count();
  for (int j = 1; j < m; ++j) {
    l2geo::Vector g(path.dim());
    for (l2geo::Index k = 0; k < path.dim(); ++k) {
      auto shifted = [&](double delta) {
        std::vector<l2geo::Vector> pts = path.points();
        pts[static_cast<std::size_t>(j)][k] += delta;
        return l2geo::discrete_energy(l2geo::DiscretePath(std::move(pts)), metric);
      };
      g[k] = (shifted(h) - shifted(-h)) / (2.0 * h);
    }
    grad.push_back(std::move(g));
  }
  return grad;
}

inline l2geo::Vector random_vector(std::mt19937_64& rng, l2geo::Index dim, double sigma) {
  std::normal_distribution<double> gauss(0.0, sigma);
  l2geo::Vector v(dim);
  for (l2geo::Index k = 0; k < dim; ++k) v[k] = gauss(rng);
  return v;
}

// Straight path between random endpoints with noisy interior points.
inline l2geo::DiscretePath random_path(std::mt19937_64& rng, l2geo::Index dim, int segments,
                                       double sigma = 0.3) {
  const l2geo::Vector p = random_vector(rng, dim, sigma);
  const l2geo::Vector q = random_vector(rng, dim, sigma);
  std::vector<l2geo::Vector> pts;
  pts.reserve(static_cast<std::size_t>(segments) + 1);
  for (int i = 0; i <= segments; ++i) {
    l2geo::Vector x = p + (static_cast<double>(i) / segments) * (q - p);
    if (i > 0 && i < segments) x += random_vector(rng, dim, sigma / 2.0);
    pts.push_back(std::move(x));
  }
  return l2geo::DiscretePath(std::move(pts));
}

// Relative discrepancy between two stacked gradients.
inline double gradient_rel_error(const std::vector<l2geo::Vector>& a,
                                 const std::vector<l2geo::Vector>& b) {
  double diff2 = 0.0, na2 = 0.0, nb2 = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    diff2 += (a[j] - b[j]).squaredNorm();
    na2 += a[j].squaredNorm();
    nb2 += b[j].squaredNorm();
  }
  const double denom = std::sqrt(std::max(na2, nb2));
  if (denom == 0.0) return std::sqrt(diff2);
  return std::sqrt(diff2) / denom;
}

}  // namespace oracle
