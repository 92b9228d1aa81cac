#pragma once

namespace scw {

/// Bessel function of the first kind J_k(x) for integer order k.
///
/// Negative orders use the reflection J_{-k}(x) = (-1)^k J_k(x), negative
/// arguments J_k(-x) = (-1)^k J_k(x). Accepted domain is |x| <= 50; the
/// power series is used for |x| <= 8, downward recurrence with unitarity
/// normalization above that. Agrees with a high-precision series reference
/// to better than 1e-12 absolute for |x| <= 5, k <= 30.
///
/// Throws std::invalid_argument outside the domain (including NaN).
double besselj(int k, double x);

/// Smallest positive solution m of J_0(m) = target, for target in (0, 1).
///
/// J_0 falls monotonically from 1 to 0 on [0, j01] (j01 = first zero), so
/// the root is unique there; it is bracketed on that interval and refined
/// by bisection until besselj(0, m) matches target to 1e-12 or better.
///
/// Throws std::invalid_argument when target is outside the open interval.
double solve_j0_equals(double target);

} // namespace scw
