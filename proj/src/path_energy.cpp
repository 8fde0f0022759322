#include "l2geo/path_energy.hpp"

#include <cmath>

namespace l2geo {

DiscretePath::DiscretePath(std::vector<Vector> points) : pts_(std::move(points)) {
  if (pts_.size() < 2) {
    throw std::invalid_argument("DiscretePath: need at least one segment (two points)");
  }
  const Index d = pts_.front().size();
  if (d < 1) throw std::invalid_argument("DiscretePath: zero-dimensional point");
  for (const Vector& x : pts_) {
    detail::check_same_dim(x.size(), d, "DiscretePath");
    if (!x.allFinite()) throw std::invalid_argument("DiscretePath: non-finite point entry");
  }
}

DiscretePath sample_path(const ParamCurve& c, int segments) {
  if (segments < 1) throw std::invalid_argument("sample_path: segments must be >= 1");
  const int pieces = c.piece_count();
  std::vector<Vector> pts;
  pts.reserve(static_cast<std::size_t>(segments) + 1);
  for (int i = 0; i <= segments; ++i) {
    // global t = i/segments; t * pieces = (i * pieces) / segments split as
    // quotient + remainder so s = 0 lands exactly on a breakpoint
    const long long num = static_cast<long long>(i) * pieces;
    int piece = static_cast<int>(num / segments);
    long long rem = num % segments;
    if (piece >= pieces) {  // t == 1
      piece = pieces - 1;
      rem = segments;
    }
    if (rem == 0) {
      pts.push_back(c.piece_start(piece));
    } else if (rem == segments) {
      pts.push_back(c.piece_end(piece));
    } else {
      const double s = static_cast<double>(rem) / segments;
      pts.push_back(c.piece_start(piece) + s * (c.piece_end(piece) - c.piece_start(piece)));
    }
  }
  return DiscretePath(std::move(pts));
}

double discrete_energy(const DiscretePath& path, const MetricSpec& m) {
  const auto& x = path.points();
  const int segs = path.segment_count();
  double acc = 0.0;
  for (int i = 0; i < segs; ++i) {
    const std::size_t j = static_cast<std::size_t>(i);
    acc += metric_eval(m, 0.5 * (x[j] + x[j + 1]), x[j + 1] - x[j], x[j + 1] - x[j]);
  }
  return segs * acc;
}

std::vector<Vector> energy_gradient(const DiscretePath& path, const MetricSpec& m) {
  const auto& x = path.points();
  const int segs = path.segment_count();
  if (segs < 2) return {};

  const bool gaussian = m.factor() == ConformalFactor::gaussian;
  const double scale = segs;

  // Per-segment pieces reused by the two adjacent interior points.
  std::vector<Vector> mid(static_cast<std::size_t>(segs));
  std::vector<Vector> a_delta(static_cast<std::size_t>(segs));
  std::vector<double> phi(static_cast<std::size_t>(segs));
  std::vector<double> quad(static_cast<std::size_t>(segs));
  for (int i = 0; i < segs; ++i) {
    const std::size_t j = static_cast<std::size_t>(i);
    const Vector delta = x[j + 1] - x[j];
    mid[j] = 0.5 * (x[j] + x[j + 1]);
    a_delta[j] = apply_diagonal(m.weights(), delta);
    phi[j] = m.conformal(mid[j]);
    quad[j] = inner(delta, a_delta[j]);
  }

  std::vector<Vector> grad;
  grad.reserve(static_cast<std::size_t>(segs) - 1);
  for (int i = 1; i < segs; ++i) {
    const std::size_t j = static_cast<std::size_t>(i);
    Vector g = phi[j - 1] * 2.0 * a_delta[j - 1] - phi[j] * 2.0 * a_delta[j];
    if (gaussian) {
      g -= phi[j - 1] * quad[j - 1] * mid[j - 1];
      g -= phi[j] * quad[j] * mid[j];
    }
    grad.push_back(scale * g);
  }
  return grad;
}

double midpoint_length(const DiscretePath& path, const MetricSpec& m) {
  const auto& x = path.points();
  double acc = 0.0;
  for (int i = 0; i < path.segment_count(); ++i) {
    const std::size_t j = static_cast<std::size_t>(i);
    acc += tangent_norm(m, 0.5 * (x[j] + x[j + 1]), x[j + 1] - x[j]);
  }
  return acc;
}

}  // namespace l2geo
