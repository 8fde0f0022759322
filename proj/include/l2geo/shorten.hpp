#pragma once

#include "l2geo/path_energy.hpp"
#include "l2geo/quadrature.hpp"

#include <cstdint>
#include <vector>

namespace l2geo {

struct OptimizerConfig {
  int max_iters = 5000;
  double grad_tol = 1e-8;  ///< stop once the gradient sup-norm falls below
  double initial_step = 1.0;
  double backtrack_factor = 0.5;
  double armijo_c = 1e-4;
  std::uint64_t rng_seed = 0;  ///< seeds perturbation-based initializations

  void validate() const;
};

/// State snapshot per optimizer iteration; `length` is the quadrature length
/// of the current polyline.
struct IterationRecord {
  int iter = 0;
  double energy = 0.0;
  double length = 0.0;
  double grad_norm = 0.0;  // sup-norm over interior-point gradients
};

enum class StopReason {
  gradient_tolerance,  ///< sup-norm of the gradient fell below grad_tol
  step_floor,          ///< backtracking exhausted; no representable descent left
  iteration_cap,       ///< max_iters accepted steps taken
};

struct ShortenResult {
  DiscretePath path;
  double length = 0.0;  // quadrature length of `path`
  double energy = 0.0;
  int iterations = 0;  // accepted descent steps
  StopReason reason = StopReason::gradient_tolerance;
};

/// Gradient descent with Armijo backtracking on discrete_energy over the
/// interior points; endpoints stay fixed. The accepted energies are strictly
/// decreasing, so the final energy never exceeds the initial one, and the
/// returned quadrature length of the polyline is a valid upper bound on
/// d_g(endpoints). Throws if a non-finite energy or gradient shows up at an
/// accepted state.
ShortenResult shorten(const DiscretePath& init, const MetricSpec& metric,
                      const OptimizerConfig& cfg, const QuadratureRule& quad,
                      std::vector<IterationRecord>* trace = nullptr);

struct Strategy {
  enum class Kind { segment, detour_sweep, optimized };

  Kind kind = Kind::segment;
  int n_max = 0;      ///< detour sweep range (detour_sweep / optimized)
  int segments = 12;  ///< polyline resolution for the optimized strategy

  static Strategy segment() { return {Kind::segment, 0, 12}; }
  static Strategy detour_sweep(int n_max) { return {Kind::detour_sweep, n_max, 12}; }
  static Strategy optimized(int n_max, int segments = 12) {
    return {Kind::optimized, n_max, segments};
  }
};

/// Which admissible competitor realized the estimate.
enum class Candidate { constant, segment, detour, shortened };

const char* candidate_name(Candidate c);

/// A certified upper bound on the geodesic pseudodistance d_g(p, q): the
/// quadrature length of an explicit admissible witness curve.
struct DistanceEstimate {
  double value = 0.0;
  Strategy::Kind strategy = Strategy::Kind::segment;
  Candidate winner = Candidate::segment;
  int best_n = 0;  ///< detour index behind the winner, 0 if none
  ParamCurve witness;
};

/// Upper-bounds d_g(p, q) by the requested strategy:
///  - segment: length of the straight segment;
///  - detour_sweep: best detour over n = 1..min(n_max, dim);
///  - optimized: best of segment, every detour, and shorten() run from the
///    best of those, resampled at strategy.segments.
/// p == q (exact coordinate equality) returns 0 with the constant witness.
DistanceEstimate estimate_distance(const Vector& p, const Vector& q, const MetricSpec& metric,
                                   const Strategy& strategy, const OptimizerConfig& cfg,
                                   const QuadratureRule& quad);

}  // namespace l2geo
