#include "l2geo/bounds.hpp"

#include <cmath>

namespace l2geo {

double alpha_bound(int n) {
  if (n < 1) throw std::invalid_argument("alpha_bound: n must be >= 1");
  return 1.0 / n;
}

double beta_bound(const Vector& p, const Vector& q, int n, const WeightSequence& w) {
  detail::check_same_dim(p.size(), q.size(), "beta_bound");
  if (n < 1) throw std::invalid_argument("beta_bound: n must be >= 1");
  const double b = bilinear_b(w, q - p, q - p);
  if (b == 0.0) return 0.0;
  const double exponent =
      -0.5 * static_cast<double>(n) * n + n * (norm(p) + norm(q - p)) + 0.5 * std::log(b);
  return std::exp(exponent);
}

}  // namespace l2geo
