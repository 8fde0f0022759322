#pragma once

#include "l2geo/curve.hpp"
#include "l2geo/metric.hpp"

#include <vector>

namespace l2geo {

/// Polyline competitor x_0 .. x_m joining fixed endpoints. Paths are value
/// types; the optimizer never mutates one in place.
class DiscretePath {
 public:
  explicit DiscretePath(std::vector<Vector> points);

  Index dim() const { return pts_.front().size(); }
  int segment_count() const { return static_cast<int>(pts_.size()) - 1; }

  const std::vector<Vector>& points() const { return pts_; }
  const Vector& point(int i) const { return pts_.at(static_cast<std::size_t>(i)); }

  ParamCurve as_curve() const { return ParamCurve(pts_); }

 private:
  std::vector<Vector> pts_;
};

/// Uniform resampling of a curve into a path with the given segment count.
/// Sample parameters are decomposed in integer arithmetic so piece joints are
/// hit exactly whenever segments is a multiple of the piece count.
DiscretePath sample_path(const ParamCurve& c, int segments);

/// Midpoint-rule path energy
///   E = m * sum_i g_{(x_i + x_{i+1})/2}(d_i, d_i),   d_i = x_{i+1} - x_i.
/// At a fixed segment count, minimizing E minimizes length and equalizes
/// segment speeds.
double discrete_energy(const DiscretePath& path, const MetricSpec& m);

/// Exact gradient of discrete_energy with respect to each interior point
/// (empty for single-segment paths). For the gaussian factor each adjacent
/// segment i contributes
///   m * phi(mid_i) * (-mid_i * B(d_i, d_i) +- 2 A d_i).
std::vector<Vector> energy_gradient(const DiscretePath& path, const MetricSpec& m);

/// Discrete length with the same midpoint tensor evaluation the energy uses:
/// sum_i tangent_norm(m, mid_i, d_i). By Cauchy-Schwarz over segments,
/// midpoint_length(path)^2 <= discrete_energy(path).
double midpoint_length(const DiscretePath& path, const MetricSpec& m);

}  // namespace l2geo
