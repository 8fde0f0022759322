#include "l2geo/shorten.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace l2geo {

void OptimizerConfig::validate() const {
  if (max_iters < 0) throw std::invalid_argument("OptimizerConfig: max_iters must be >= 0");
  if (!(grad_tol > 0.0)) throw std::invalid_argument("OptimizerConfig: grad_tol must be > 0");
  if (!(initial_step > 0.0)) throw std::invalid_argument("OptimizerConfig: initial_step must be > 0");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0)) {
    throw std::invalid_argument("OptimizerConfig: backtrack factor must lie in (0, 1)");
  }
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) {
    throw std::invalid_argument("OptimizerConfig: Armijo constant must lie in (0, 1)");
  }
}

namespace {

double sup_norm(const std::vector<Vector>& vs) {
  double s = 0.0;
  for (const Vector& v : vs) s = std::max(s, v.lpNorm<Eigen::Infinity>());
  return s;
}

double sq_sum(const std::vector<Vector>& vs) {
  double s = 0.0;
  for (const Vector& v : vs) s += inner(v, v);
  return s;
}

bool all_finite(const std::vector<Vector>& vs) {
  for (const Vector& v : vs) {
    if (!v.allFinite()) return false;
  }
  return true;
}

DiscretePath with_interior(const DiscretePath& base, const std::vector<Vector>& interior) {
  std::vector<Vector> pts = base.points();
  for (std::size_t j = 0; j < interior.size(); ++j) pts[j + 1] = interior[j];
  return DiscretePath(std::move(pts));
}

}  // namespace

ShortenResult shorten(const DiscretePath& init, const MetricSpec& metric,
                      const OptimizerConfig& cfg, const QuadratureRule& quad,
                      std::vector<IterationRecord>* trace) {
  cfg.validate();
  quad.validate();

  DiscretePath path = init;
  int accepted = 0;
  StopReason reason = StopReason::gradient_tolerance;
  constexpr double kMinStep = 1e-18;

  while (true) {
    const double energy = discrete_energy(path, metric);
    const std::vector<Vector> grad = energy_gradient(path, metric);
    if (!std::isfinite(energy) || !all_finite(grad)) {
      throw std::runtime_error("shorten: non-finite energy or gradient at iteration " +
                               std::to_string(accepted));
    }
    const double gsup = sup_norm(grad);
    if (trace) {
      trace->push_back({accepted, energy, curve_length(path.as_curve(), metric, quad), gsup});
    }
    if (grad.empty() || gsup < cfg.grad_tol) {
      reason = StopReason::gradient_tolerance;
      break;
    }
    if (accepted >= cfg.max_iters) {
      reason = StopReason::iteration_cap;
      break;
    }

    // Armijo backtracking along -grad; the directional derivative there is
    // -sq_sum(grad).
    const double slope = sq_sum(grad);
    std::vector<Vector> interior(grad.size());
    double step = cfg.initial_step;
    bool moved = false;
    while (step >= kMinStep) {
      for (std::size_t j = 0; j < grad.size(); ++j) {
        interior[j] = path.point(static_cast<int>(j) + 1) - step * grad[j];
      }
      const DiscretePath candidate = with_interior(path, interior);
      const double trial = discrete_energy(candidate, metric);
      if (std::isfinite(trial) && trial <= energy - cfg.armijo_c * step * slope) {
        path = candidate;
        moved = true;
        break;
      }
      step *= cfg.backtrack_factor;
    }
    if (!moved) {  // line search exhausted; stay at the current point
      reason = StopReason::step_floor;
      break;
    }
    ++accepted;
  }

  const double length = curve_length(path.as_curve(), metric, quad);
  const double energy = discrete_energy(path, metric);
  return {std::move(path), length, energy, accepted, reason};
}

const char* candidate_name(Candidate c) {
  switch (c) {
    case Candidate::constant: return "constant";
    case Candidate::segment: return "segment";
    case Candidate::detour: return "detour";
    case Candidate::shortened: return "shortened";
  }
  return "unknown";
}

DistanceEstimate estimate_distance(const Vector& p, const Vector& q, const MetricSpec& metric,
                                   const Strategy& strategy, const OptimizerConfig& cfg,
                                   const QuadratureRule& quad) {
  detail::check_same_dim(p.size(), q.size(), "estimate_distance");

  if (p == q) {
    ParamCurve constant = segment_curve(p, q);
    DistanceEstimate est{0.0, strategy.kind, Candidate::constant, 0, constant};
    est.value = curve_length(constant, metric, quad);  // exactly 0: zero velocity
    return est;
  }

  ParamCurve seg = segment_curve(p, q);
  const double seg_len = curve_length(seg, metric, quad);
  DistanceEstimate best{seg_len, strategy.kind, Candidate::segment, 0, seg};

  if (strategy.kind == Strategy::Kind::segment) return best;

  const int n_cap = static_cast<int>(std::min<Index>(strategy.n_max, p.size()));
  if (n_cap < 1) throw std::invalid_argument("estimate_distance: detour sweep needs n_max >= 1");

  DistanceEstimate best_detour{std::numeric_limits<double>::infinity(), strategy.kind,
                               Candidate::detour, 0, seg};
  for (int n = 1; n <= n_cap; ++n) {
    ParamCurve detour = detour_curve(p, q, n);
    const double len = curve_length(detour, metric, quad);
    if (len < best_detour.value) {
      best_detour = {len, strategy.kind, Candidate::detour, n, detour};
    }
  }

  if (strategy.kind == Strategy::Kind::detour_sweep) return best_detour;

  // optimized: shorten the better of segment and best detour, then take the
  // overall minimum.
  if (best_detour.value < best.value) best = best_detour;
  const DiscretePath init = sample_path(best.witness, strategy.segments);
  const ShortenResult opt = shorten(init, metric, cfg, quad);
  if (opt.length < best.value) {
    best = {opt.length, strategy.kind, Candidate::shortened, best.best_n,
            opt.path.as_curve()};
  }
  return best;
}

}  // namespace l2geo
