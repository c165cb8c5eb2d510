#pragma once

#include <functional>

namespace sqheat {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double l1_norm = 0.0;
};

inline constexpr double kDefaultQuadTolerance = 1e-10;

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b].
///
/// Converged when error_estimate <= rel_tol * l1_norm. Throws NumericError
/// (carrying the achieved tolerance) otherwise, and DomainError for
/// rel_tol outside (0, 1e-3] or a non-finite integrand.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = kDefaultQuadTolerance);

}  // namespace sqheat
