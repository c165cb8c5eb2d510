#include "sqheat/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqheat/errors.hpp"

namespace sqheat {

Temperature::Temperature(double tau) : tau_(tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw DomainError("temperature must be finite and > 0, got " +
                      std::to_string(tau));
  }
}

SqueezedThermalState::SqueezedThermalState(double n_th, double r, double theta)
    : n_th_(n_th), r_(r), theta_(theta) {
  if (!(n_th >= 0.0) || !std::isfinite(n_th)) {
    throw DomainError("thermal occupancy must be finite and >= 0, got " +
                      std::to_string(n_th));
  }
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("squeezing must be finite and >= 0, got " +
                      std::to_string(r));
  }
  if (theta != 0.0) {
    throw DomainError("only theta = 0 squeezing is supported");
  }
}

SqueezedThermalState SqueezedThermalState::thermal(Temperature tau) {
  return {bose_einstein(tau), 0.0};
}

SqueezedThermalState SqueezedThermalState::squeezed(Temperature tau, double r) {
  return {bose_einstein(tau), r};
}

double CovarianceMatrix::uncertainty_slack() const noexcept {
  // (n + 1/2)^2 - m^2 - 1/4 = n (n + 1) - m^2, which keeps the vacuum exact.
  return n_cm * (n_cm + 1.0) - m_cm * m_cm;
}

double bose_einstein(Temperature tau) {
  return 1.0 / std::expm1(1.0 / tau.value());
}

Temperature temperature_of(double occupancy) {
  if (!(occupancy > 0.0) || !std::isfinite(occupancy)) {
    throw DomainError("temperature is undefined for occupancy " +
                      std::to_string(occupancy));
  }
  return Temperature(1.0 / std::log1p(1.0 / occupancy));
}

CovarianceMatrix covariance_of(const SqueezedThermalState& state) {
  const double a = state.n_th() + 0.5;
  const double two_r = 2.0 * state.r();
  // a cosh(2r) - 1/2 = n_th + 2a sinh^2(r); the second form avoids
  // cancellation for small r.
  const double sh = std::sinh(state.r());
  return {state.n_th() + 2.0 * a * sh * sh, a * std::sinh(two_r)};
}

bool is_physical(const CovarianceMatrix& cm) noexcept {
  if (!std::isfinite(cm.n_cm) || !std::isfinite(cm.m_cm)) return false;
  if (cm.n_cm < -kPhysicalityTolerance) return false;
  const double scale = std::max(1.0, (cm.n_cm + 0.5) * (cm.n_cm + 0.5));
  return cm.uncertainty_slack() >= -kPhysicalityTolerance * scale;
}

bool is_p_representable(const CovarianceMatrix& cm) {
  if (!is_physical(cm)) {
    throw DomainError("covariance matrix violates the uncertainty relation (n=" +
                      std::to_string(cm.n_cm) +
                      ", m=" + std::to_string(cm.m_cm) + ")");
  }
  return cm.n_cm >= std::abs(cm.m_cm);
}

double classicality(double n_th, double r) {
  return (n_th + 0.5) * std::exp(-2.0 * r) - 0.5;
}

double classicality(const SqueezedThermalState& state) {
  return classicality(state.n_th(), state.r());
}

double classicality(const CovarianceMatrix& cm) noexcept {
  return cm.n_cm - std::abs(cm.m_cm);
}

ClassicalityClass classify(double c) noexcept {
  if (std::abs(c) <= kBoundaryTolerance) return ClassicalityClass::Boundary;
  return c > 0.0 ? ClassicalityClass::Classical
                 : ClassicalityClass::NonClassical;
}

double critical_squeezing(Temperature tau) {
  return 0.5 * std::log1p(2.0 * bose_einstein(tau));
}

}  // namespace sqheat
