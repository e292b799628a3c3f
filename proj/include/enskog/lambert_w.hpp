#pragma once

namespace enskog {

/// Principal branch W0 of the Lambert W function, real arguments only.
///
/// Solves w * exp(w) = x for w >= -1. Valid for x >= -1/e; arguments within
/// 1e-15 below the branch point are clamped to -1/e, anything lower throws
/// std::domain_error. The result satisfies |w e^w - x| <= 1e-14 * max(|x|, 1).
double lambert_w0(double x);

/// W0(exp(s)) without forming exp(s), so s may be far above log(DBL_MAX).
/// Used for far-field density continuations where the argument is e^(w^2 P^2).
double lambert_w0_exp(double s);

}  // namespace enskog
