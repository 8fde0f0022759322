#pragma once

#include "l2geo/curve.hpp"
#include "l2geo/metric.hpp"

#include <vector>

namespace l2geo {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  Vector nodes;    // ascending
  Vector weights;  // positive, summing to 2

  static GaussLegendre rule(int point_count);
};

/// Composite Gauss-Legendre quadrature with panel-doubling refinement.
/// Refinement stops once the relative change between successive panel counts
/// drops below refine_rel_tol, or at max_panels_per_piece.
struct QuadratureRule {
  int nodes_per_panel = 16;
  int panels_per_piece = 8;
  double refine_rel_tol = 1e-10;
  int max_panels_per_piece = 1024;

  void validate() const;
};

/// Length contribution of one affine piece under the metric.
double piece_length(const ParamCurve& c, int piece, const MetricSpec& m, const QuadratureRule& q);

std::vector<double> piece_lengths(const ParamCurve& c, const MetricSpec& m,
                                  const QuadratureRule& q);

/// L(c) = integral over [0,1] of tangent_norm(m, c(t), c'(t)) dt, summed piece
/// by piece. Nonnegative and additive over concatenation.
double curve_length(const ParamCurve& c, const MetricSpec& m, const QuadratureRule& q);

}  // namespace l2geo
