#pragma once

#include "l2geo/sequence.hpp"

namespace l2geo {

enum class ConformalFactor {
  gaussian,      ///< phi(p) = exp(-|p|^2)
  constant_one,  ///< phi(p) = 1
};

/// Conformal metric tensor g_p(v, w) = phi(p) * B(v, w), where B is the
/// diagonal bilinear form of a WeightSequence. Covers both the decaying
/// gaussian-factor metric and the flat Euclidean control.
class MetricSpec {
 public:
  MetricSpec(ConformalFactor factor, WeightSequence weights)
      : factor_(factor), weights_(std::move(weights)) {}

  /// phi(p) = exp(-|p|^2), w_k = k^-4
  static MetricSpec weak_gaussian() {
    return MetricSpec(ConformalFactor::gaussian, WeightSequence::inverse_quartic());
  }

  /// phi = 1, w_k = 1: tangent_norm reduces to the plain l2 norm.
  static MetricSpec euclidean_control() {
    return MetricSpec(ConformalFactor::constant_one, WeightSequence::ones());
  }

  ConformalFactor factor() const { return factor_; }
  const WeightSequence& weights() const { return weights_; }

  /// log phi(p); kept separate so bound computations can stay in log space.
  template <typename DP>
  double log_conformal(const Eigen::MatrixBase<DP>& p) const {
    return factor_ == ConformalFactor::gaussian ? -inner(p.derived(), p.derived()) : 0.0;
  }

  /// phi(p). Underflows to 0 for large |p| in the gaussian case.
  template <typename DP>
  double conformal(const Eigen::MatrixBase<DP>& p) const {
    return factor_ == ConformalFactor::gaussian ? std::exp(log_conformal(p)) : 1.0;
  }

 private:
  ConformalFactor factor_;
  WeightSequence weights_;
};

/// g_p(v, w) = phi(p) * B(v, w)
template <typename DP, typename DV, typename DW>
double metric_eval(const MetricSpec& m, const Eigen::MatrixBase<DP>& p,
                   const Eigen::MatrixBase<DV>& v, const Eigen::MatrixBase<DW>& w) {
  detail::check_same_dim(p.size(), v.size(), "metric_eval");
  return m.conformal(p) * bilinear_b(m.weights(), v, w);
}

/// sqrt(g_p(v, v)) = phi(p)^{1/2} * sqrt(B(v, v)). Evaluated with a half-log
/// conformal factor so it degrades to 0 (never NaN) when phi underflows.
template <typename DP, typename DV>
double tangent_norm(const MetricSpec& m, const Eigen::MatrixBase<DP>& p,
                    const Eigen::MatrixBase<DV>& v) {
  detail::check_same_dim(p.size(), v.size(), "tangent_norm");
  return std::exp(0.5 * m.log_conformal(p)) * std::sqrt(bilinear_b(m.weights(), v, v));
}

}  // namespace l2geo
