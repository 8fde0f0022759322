#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace l2geo {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace detail {

inline void check_same_dim(Index a, Index b, const char* where) {
  if (a != b) {
    throw std::invalid_argument(std::string(where) + ": incompatible truncations (dim " +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail

/// Positive diagonal weights w_k, indexed from k = 1. The default rule is
/// w_k = k^-4; `ones()` gives the flat control weights. Arbitrary positive
/// prefixes can be supplied with `from_values`.
class WeightSequence {
 public:
  /// w_k = k^-exponent
  static WeightSequence inverse_power(double exponent) {
    if (!std::isfinite(exponent)) {
      throw std::invalid_argument("WeightSequence: exponent must be finite");
    }
    WeightSequence w;
    w.exponent_ = exponent;
    return w;
  }

  static WeightSequence inverse_quartic() { return inverse_power(4.0); }
  static WeightSequence ones() { return inverse_power(0.0); }

  /// Explicit weights for k = 1..values.size(); indices beyond the prefix throw.
  static WeightSequence from_values(Vector values) {
    if (values.size() == 0) {
      throw std::invalid_argument("WeightSequence: empty weight prefix");
    }
    for (Index i = 0; i < values.size(); ++i) {
      if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
        throw std::invalid_argument("WeightSequence: weights must be positive and finite");
      }
    }
    WeightSequence w;
    w.values_ = std::move(values);
    return w;
  }

  /// Weight at 1-based coordinate index k.
  double operator()(Index k) const {
    if (k < 1) throw std::out_of_range("WeightSequence: index must be >= 1");
    if (values_.size() > 0) {
      if (k > values_.size()) {
        throw std::out_of_range("WeightSequence: index beyond explicit weight prefix");
      }
      return values_[k - 1];
    }
    return std::pow(static_cast<double>(k), -exponent_);
  }

  /// Dense diagonal [w_1 .. w_dim].
  Vector diagonal(Index dim) const {
    Vector d(dim);
    for (Index k = 0; k < dim; ++k) d[k] = (*this)(k + 1);
    return d;
  }

 private:
  WeightSequence() = default;

  double exponent_ = 4.0;
  Vector values_;  // empty: power rule applies
};

/// Standard scalar product sum_k x_k y_k. Accumulation is sequential in
/// index order, so values computed at different truncation dims agree
/// exactly on zero-padded inputs.
template <typename DX, typename DY>
double inner(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  detail::check_same_dim(x.size(), y.size(), "inner");
  double acc = 0.0;
  for (Index k = 0; k < x.size(); ++k) acc += x.coeff(k) * y.coeff(k);
  return acc;
}

/// sqrt(inner(x, x))
template <typename DX>
double norm(const Eigen::MatrixBase<DX>& x) {
  return std::sqrt(inner(x.derived(), x.derived()));
}

/// (A x)_k = w_k x_k
template <typename DX>
Vector apply_diagonal(const WeightSequence& w, const Eigen::MatrixBase<DX>& x) {
  Vector out(x.size());
  for (Index k = 0; k < x.size(); ++k) out[k] = w(k + 1) * x.coeff(k);
  return out;
}

/// B(x, y) = inner(x, A y) with A = diag(w). Symmetric and positive definite
/// on any truncation.
template <typename DX, typename DY>
double bilinear_b(const WeightSequence& w, const Eigen::MatrixBase<DX>& x,
                  const Eigen::MatrixBase<DY>& y) {
  detail::check_same_dim(x.size(), y.size(), "bilinear_b");
  double acc = 0.0;
  for (Index k = 0; k < x.size(); ++k) acc += x.coeff(k) * (w(k + 1) * y.coeff(k));
  return acc;
}

/// e_k in dimension dim (1-based k).
inline Vector basis_vector(Index k, Index dim) {
  if (dim < 1) throw std::invalid_argument("basis_vector: dim must be >= 1");
  if (k < 1 || k > dim) {
    throw std::out_of_range("basis_vector: index " + std::to_string(k) +
                            " beyond truncation dim " + std::to_string(dim));
  }
  Vector e = Vector::Zero(dim);
  e[k - 1] = 1.0;
  return e;
}

}  // namespace l2geo
