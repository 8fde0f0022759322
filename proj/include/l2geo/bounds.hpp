#pragma once

#include "l2geo/sequence.hpp"

namespace l2geo {

/// Certified upper bound 1/n for the length of the outgoing and returning
/// detour pieces under the gaussian-factor metric with the default k^-4
/// weights: sqrt(B(n e_n, n e_n)) = n * sqrt(w_n) = 1/n and the conformal
/// factor never exceeds 1.
double alpha_bound(int n);

/// Certified upper bound sqrt(B(q-p, q-p)) * exp(-n^2/2 + n (|p| + |q-p|))
/// for the crossing piece. The whole expression is assembled in log space and
/// exponentiated once, so very negative exponents underflow to 0, never NaN.
double beta_bound(const Vector& p, const Vector& q, int n, const WeightSequence& w);

}  // namespace l2geo
