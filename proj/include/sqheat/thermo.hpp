#pragma once

// Energy bookkeeping for squeezed thermal states. Along any path in the
// (r, n_th) plane the differential of E = (n_th + 1/2) cosh 2r splits into
//   work done on the mode:  2 (n_th + 1/2) sinh 2r dr
//   heat from the bath:     cosh 2r dn_th
// Work is always stored as work done ON the system; cycle code negates it
// when it reports extracted work.

#include <functional>
#include <span>
#include <vector>

#include "sqheat/gaussian.hpp"
#include "sqheat/quadrature.hpp"

namespace sqheat {

/// A piecewise-smooth curve s in [0, 1] -> (r(s), n_th(s)).
///
/// Each piece carries its own derivatives so path integrals need no
/// numerical differentiation. Breakpoints between pieces are integrated
/// separately.
class ThermoPath {
 public:
  using Fn = std::function<double(double)>;

  struct Piece {
    double s_begin;
    double s_end;
    Fn r;
    Fn n;
    Fn dr_ds;
    Fn dn_ds;
  };

  struct Point {
    double r;
    double n;
  };

  explicit ThermoPath(std::vector<Piece> pieces);

  /// Straight segments through the given points, equally spaced in s.
  static ThermoPath polyline(std::span<const Point> points);
  static ThermoPath segment(Point from, Point to);
  /// A single smooth piece over s in [0, 1].
  static ThermoPath smooth(Fn r, Fn n, Fn dr_ds, Fn dn_ds);

  [[nodiscard]] Point at(double s) const;
  [[nodiscard]] Point start() const { return at(0.0); }
  [[nodiscard]] Point end() const { return at(1.0); }
  [[nodiscard]] const std::vector<Piece>& pieces() const noexcept {
    return pieces_;
  }

 private:
  std::vector<Piece> pieces_;
};

struct EnergyDelta {
  double work_on = 0.0;
  double heat_in = 0.0;
  double dE = 0.0;
};

[[nodiscard]] double internal_energy(const SqueezedThermalState& state);
[[nodiscard]] double internal_energy(double n_th, double r);

/// Partial derivatives of the internal energy.
[[nodiscard]] double energy_dr(double n_th, double r);
[[nodiscard]] double energy_dn(double r);

/// Work and heat accumulated along a path by adaptive quadrature.
/// dE is work_on + heat_in. Throws DomainError if the path leaves
/// r >= 0, n_th >= 0 and NumericError on quadrature failure.
[[nodiscard]] EnergyDelta work_heat_along(
    const ThermoPath& path, double quad_tol = kDefaultQuadTolerance);

/// Approximate relative entropy of coherence, beta_s * m with
/// beta_s = cosh(2r) / tau(n_th) and m = (n_th + 1/2) sinh 2r.
/// Only an estimate: no entropy is actually evaluated. n_th = 0 is a
/// DomainError (infinite inverse temperature).
[[nodiscard]] double coherence_estimate(const SqueezedThermalState& state);

/// hbar omega mu Delta m with mu = tanh(2 r_bath) and Delta m the change of
/// the CM off-diagonal from a to b.
[[nodiscard]] double free_energy_work(const SqueezedThermalState& a,
                                      const SqueezedThermalState& b,
                                      double bath_r);

}  // namespace sqheat
