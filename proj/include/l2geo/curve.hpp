#pragma once

#include "l2geo/sequence.hpp"

#include <vector>

namespace l2geo {

/// Piecewise-affine curve [0,1] -> R^D stored as breakpoints, so consecutive
/// pieces are continuous by construction. The global parameter splits [0,1]
/// uniformly across pieces; within piece i the velocity is the constant
/// vector (end - start) * piece_count.
class ParamCurve {
 public:
  explicit ParamCurve(std::vector<Vector> breakpoints);

  Index dim() const { return pts_.front().size(); }
  int piece_count() const { return static_cast<int>(pts_.size()) - 1; }

  const std::vector<Vector>& breakpoints() const { return pts_; }
  const Vector& piece_start(int i) const { return pts_.at(static_cast<std::size_t>(i)); }
  const Vector& piece_end(int i) const { return pts_.at(static_cast<std::size_t>(i) + 1); }

  /// Curve point at global t; t is clamped to [0,1].
  Vector point_at(double t) const;

  /// Velocity at global t (piecewise constant; at a joint, the right piece wins).
  Vector velocity_at(double t) const;

 private:
  std::vector<Vector> pts_;
};

/// Single piece t -> p + t (q - p).
ParamCurve segment_curve(const Vector& p, const Vector& q);

/// Three-piece curve through p, p + n e_n, q + n e_n, q. Requires n <= dim.
ParamCurve detour_curve(const Vector& p, const Vector& q, int n);

}  // namespace l2geo
