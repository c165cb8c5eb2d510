#pragma once

// Second-moment dynamics of one bosonic mode coupled to a squeezed thermal
// bath under the Born-Markov master equation
//
//   d rho/dt = g (N+1) D[a] + g N D[a+] + g M (a+ rho a+ - {a+^2, rho}/2)
//              + g M* (a rho a - {a^2, rho}/2).
//
// Taking expectations gives two decoupled linear relaxations
//   dn/dt = g (n_env - n),   dm/dt = g (m_env - m)
// with (n_env, m_env) the CM entries of the bath's squeezed thermal state.
// Only dissipators are kept (interaction picture) and theta = 0, so m stays
// real. Times are in units of the inverse relaxation rate.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "sqheat/gaussian.hpp"

namespace sqheat {

struct BathSpec {
  Temperature tau;
  double r_bath = 0.0;
  double gamma = 1.0;

  BathSpec(Temperature tau, double r_bath, double gamma);
};

struct MomentState {
  double n = 0.0;
  double m = 0.0;

  [[nodiscard]] CovarianceMatrix cm() const noexcept { return {n, m}; }
  friend bool operator==(const MomentState&, const MomentState&) = default;
};

struct MomentDerivative {
  double dn_dt = 0.0;
  double dm_dt = 0.0;
};

struct MomentTrajectory {
  std::vector<double> times;
  std::vector<MomentState> states;

  [[nodiscard]] std::size_t size() const noexcept { return times.size(); }
  [[nodiscard]] const MomentState& back() const { return states.back(); }
};

/// Parameters of the stationary state exp(-beta_s (H - mu A)) / Z.
struct GeneralizedGibbs {
  double beta_s;
  double mu;
};

/// Step cap used when the caller has no preference: 1e-3 / gamma.
[[nodiscard]] double default_dt_max(const BathSpec& bath);

/// The bath's fixed point (n_env, m_env).
[[nodiscard]] MomentState bath_moments(const BathSpec& bath);

[[nodiscard]] MomentDerivative moment_derivatives(const MomentState& s,
                                                  const BathSpec& bath);

/// Fixed-step RK4 from s0 over [0, t_final] with steps no longer than
/// dt_max, recording every step. Throws NumericError if any state violates
/// the uncertainty relation by more than 1e-9.
[[nodiscard]] MomentTrajectory evolve(const MomentState& s0, const BathSpec& bath,
                                      double t_final, double dt_max);

/// As evolve, but keeps only `samples` (>= 2) equally spaced records
/// including both ends. The step count is rounded up so every record falls
/// on a step boundary.
[[nodiscard]] MomentTrajectory evolve_sampled(const MomentState& s0,
                                              const BathSpec& bath,
                                              double t_final, double dt_max,
                                              std::size_t samples);

/// Terminal states of many independent relaxations advanced together on the
/// vector kernels. All lanes share t_final and the step size.
[[nodiscard]] std::vector<MomentState> evolve_ensemble(
    std::span<const MomentState> initial, std::span<const BathSpec> baths,
    double t_final, double dt_max);

[[nodiscard]] SqueezedThermalState steady_state(const BathSpec& bath);

[[nodiscard]] GeneralizedGibbs generalized_gibbs(const BathSpec& bath);

/// CSV columns: time,n,m,classicality,energy with classicality = n - |m| and
/// energy = n + 1/2.
void write_trajectory_csv(std::ostream& out, const MomentTrajectory& trajectory);

}  // namespace sqheat
