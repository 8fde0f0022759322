#include "l2geo/curve.hpp"

#include <algorithm>
#include <cmath>

namespace l2geo {

ParamCurve::ParamCurve(std::vector<Vector> breakpoints) : pts_(std::move(breakpoints)) {
  if (pts_.size() < 2) {
    throw std::invalid_argument("ParamCurve: need at least one piece (two breakpoints)");
  }
  const Index d = pts_.front().size();
  if (d < 1) throw std::invalid_argument("ParamCurve: zero-dimensional breakpoint");
  for (const Vector& x : pts_) {
    detail::check_same_dim(x.size(), d, "ParamCurve");
    if (!x.allFinite()) throw std::invalid_argument("ParamCurve: non-finite breakpoint entry");
  }
}

Vector ParamCurve::point_at(double t) const {
  const int m = piece_count();
  if (t <= 0.0) return pts_.front();
  if (t >= 1.0) return pts_.back();
  const double u = t * m;
  const int i = std::min(static_cast<int>(std::floor(u)), m - 1);
  const double s = u - i;
  const std::size_t j = static_cast<std::size_t>(i);
  return pts_[j] + s * (pts_[j + 1] - pts_[j]);
}

Vector ParamCurve::velocity_at(double t) const {
  const int m = piece_count();
  const double u = std::clamp(t, 0.0, 1.0) * m;
  const int i = std::min(static_cast<int>(std::floor(u)), m - 1);
  const std::size_t j = static_cast<std::size_t>(i);
  return (pts_[j + 1] - pts_[j]) * static_cast<double>(m);
}

ParamCurve segment_curve(const Vector& p, const Vector& q) {
  detail::check_same_dim(p.size(), q.size(), "segment_curve");
  return ParamCurve({p, q});
}

ParamCurve detour_curve(const Vector& p, const Vector& q, int n) {
  detail::check_same_dim(p.size(), q.size(), "detour_curve");
  if (n < 1 || n > p.size()) {
    throw std::out_of_range("detour_curve: direction index " + std::to_string(n) +
                            " outside truncation dim " + std::to_string(p.size()));
  }
  Vector lift = static_cast<double>(n) * basis_vector(n, p.size());
  return ParamCurve({p, p + lift, q + lift, q});
}

}  // namespace l2geo
