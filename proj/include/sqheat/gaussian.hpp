#pragma once

// Single-mode, zero-displacement Gaussian states in natural units
// (hbar = omega = k_B = 1) and the P-representability (classicality)
// machinery built on their covariance matrix.

#include <array>

namespace sqheat {

/// Dimensionless temperature k_B T / (hbar omega). Always strictly positive.
class Temperature {
 public:
  explicit Temperature(double tau);

  [[nodiscard]] double value() const noexcept { return tau_; }

  friend bool operator==(const Temperature&, const Temperature&) = default;
  friend auto operator<=>(const Temperature&, const Temperature&) = default;

 private:
  double tau_;
};

/// Squeezed thermal state S(r) rho_th S(r)^dagger with squeezing along theta.
///
/// Only theta = 0 is supported; the field exists so a general phase can be
/// added later without changing the layout of callers.
class SqueezedThermalState {
 public:
  SqueezedThermalState(double n_th, double r, double theta = 0.0);

  static SqueezedThermalState thermal(Temperature tau);
  static SqueezedThermalState squeezed(Temperature tau, double r);

  [[nodiscard]] double n_th() const noexcept { return n_th_; }
  [[nodiscard]] double r() const noexcept { return r_; }
  [[nodiscard]] double theta() const noexcept { return theta_; }

  friend bool operator==(const SqueezedThermalState&,
                         const SqueezedThermalState&) = default;

 private:
  double n_th_;
  double r_;
  double theta_;
};

/// V = [[n + 1/2, m], [m, n + 1/2]] with m = -<a^2> (real for theta = 0).
struct CovarianceMatrix {
  double n_cm = 0.0;
  double m_cm = 0.0;

  [[nodiscard]] std::array<std::array<double, 2>, 2> matrix() const noexcept {
    return {{{n_cm + 0.5, m_cm}, {m_cm, n_cm + 0.5}}};
  }

  /// (n + 1/2)^2 - m^2 - 1/4; non-negative for every quantum state.
  [[nodiscard]] double uncertainty_slack() const noexcept;

  friend bool operator==(const CovarianceMatrix&,
                         const CovarianceMatrix&) = default;
};

enum class ClassicalityClass { Classical, Boundary, NonClassical };

// |C| at or below this is reported as Boundary rather than either side.
inline constexpr double kBoundaryTolerance = 1e-12;

// Slack allowed in the uncertainty relation before a CM counts as unphysical.
inline constexpr double kPhysicalityTolerance = 1e-12;

/// 1 / (e^{1/tau} - 1).
[[nodiscard]] double bose_einstein(Temperature tau);

/// Inverse of bose_einstein: tau = 1 / ln(1 + 1/n). Requires n > 0.
[[nodiscard]] Temperature temperature_of(double occupancy);

[[nodiscard]] CovarianceMatrix covariance_of(const SqueezedThermalState& state);

[[nodiscard]] bool is_physical(const CovarianceMatrix& cm) noexcept;

/// V - I/2 >= 0, evaluated as n_cm >= |m_cm|. Throws DomainError for an
/// unphysical matrix. C = 0 counts as P-representable.
[[nodiscard]] bool is_p_representable(const CovarianceMatrix& cm);

/// C = (n_th + 1/2) e^{-2r} - 1/2. Negative means non-classical.
[[nodiscard]] double classicality(const SqueezedThermalState& state);
[[nodiscard]] double classicality(double n_th, double r);
[[nodiscard]] double classicality(const CovarianceMatrix& cm) noexcept;

[[nodiscard]] ClassicalityClass classify(double classicality_value) noexcept;

/// Squeezing at which a squeezed thermal state at temperature tau stops
/// being P-representable: r_c = ln(2 n_th + 1) / 2.
[[nodiscard]] double critical_squeezing(Temperature tau);

}  // namespace sqheat
