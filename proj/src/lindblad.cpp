#include "sqheat/lindblad.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "sqheat/csv.hpp"
#include "sqheat/errors.hpp"
#include "sqheat/kernels.hpp"

namespace sqheat {

namespace {

constexpr double kTrajectoryPhysicalityTolerance = 1e-9;

void check_step(double t, const MomentState& s) {
  const double slack = s.cm().uncertainty_slack();
  if (!(slack >= -kTrajectoryPhysicalityTolerance)) {
    std::ostringstream msg;
    msg << "trajectory left the physical region at t=" << t << " (n=" << s.n
        << ", m=" << s.m << ", slack=" << slack << ")";
    throw NumericError(msg.str());
  }
}

void check_horizon(double t_final, double dt_max) {
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw DomainError("t_final must be finite and >= 0");
  }
  if (!(dt_max > 0.0) || !std::isfinite(dt_max)) {
    throw DomainError("dt_max must be finite and > 0");
  }
}

std::size_t step_count(double t_final, double dt_max) {
  return static_cast<std::size_t>(std::ceil(t_final / dt_max));
}

MomentState rk4_step(const MomentState& s, const BathSpec& bath, double h) {
  auto f = [&bath](const MomentState& x) { return moment_derivatives(x, bath); };
  const MomentDerivative k1 = f(s);
  const MomentDerivative k2 =
      f({s.n + 0.5 * h * k1.dn_dt, s.m + 0.5 * h * k1.dm_dt});
  const MomentDerivative k3 =
      f({s.n + 0.5 * h * k2.dn_dt, s.m + 0.5 * h * k2.dm_dt});
  const MomentDerivative k4 = f({s.n + h * k3.dn_dt, s.m + h * k3.dm_dt});
  return {s.n + h / 6.0 * (k1.dn_dt + 2.0 * k2.dn_dt + 2.0 * k3.dn_dt + k4.dn_dt),
          s.m + h / 6.0 * (k1.dm_dt + 2.0 * k2.dm_dt + 2.0 * k3.dm_dt + k4.dm_dt)};
}

// Integrates with `steps` equal steps, calling record(k, t, state) at every
// step index k that is a multiple of `stride` (and at k = 0).
template <class Record>
void integrate_fixed(const MomentState& s0, const BathSpec& bath, double t_final,
                     std::size_t steps, std::size_t stride, Record&& record) {
  if (!is_physical(s0.cm())) {
    throw DomainError("initial moments violate the uncertainty relation");
  }
  record(0.0, s0);
  if (steps == 0) return;
  const double h = t_final / static_cast<double>(steps);
  MomentState s = s0;
  for (std::size_t k = 1; k <= steps; ++k) {
    s = rk4_step(s, bath, h);
    const double t = k == steps ? t_final : static_cast<double>(k) * h;
    check_step(t, s);
    if (k % stride == 0) record(t, s);
  }
}

}  // namespace

BathSpec::BathSpec(Temperature tau_, double r_bath_, double gamma_)
    : tau(tau_), r_bath(r_bath_), gamma(gamma_) {
  if (!(r_bath >= 0.0) || !std::isfinite(r_bath)) {
    throw DomainError("bath squeezing must be finite and >= 0");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("relaxation rate must be finite and > 0");
  }
}

double default_dt_max(const BathSpec& bath) { return 1e-3 / bath.gamma; }

MomentState bath_moments(const BathSpec& bath) {
  const CovarianceMatrix cm = covariance_of(steady_state(bath));
  return {cm.n_cm, cm.m_cm};
}

MomentDerivative moment_derivatives(const MomentState& s, const BathSpec& bath) {
  const MomentState env = bath_moments(bath);
  return {bath.gamma * (env.n - s.n), bath.gamma * (env.m - s.m)};
}

MomentTrajectory evolve(const MomentState& s0, const BathSpec& bath,
                        double t_final, double dt_max) {
  check_horizon(t_final, dt_max);
  const std::size_t steps = step_count(t_final, dt_max);
  MomentTrajectory out;
  out.times.reserve(steps + 1);
  out.states.reserve(steps + 1);
  integrate_fixed(s0, bath, t_final, steps, 1, [&out](double t, const MomentState& s) {
    out.times.push_back(t);
    out.states.push_back(s);
  });
  return out;
}

MomentTrajectory evolve_sampled(const MomentState& s0, const BathSpec& bath,
                                double t_final, double dt_max,
                                std::size_t samples) {
  check_horizon(t_final, dt_max);
  if (samples < 2) throw DomainError("need at least two samples");
  if (t_final == 0.0) return evolve(s0, bath, t_final, dt_max);
  const std::size_t intervals = samples - 1;
  const double sample_spacing = t_final / static_cast<double>(intervals);
  const std::size_t stride = std::max<std::size_t>(1, step_count(sample_spacing, dt_max));
  MomentTrajectory out;
  out.times.reserve(samples);
  out.states.reserve(samples);
  integrate_fixed(s0, bath, t_final, stride * intervals, stride,
                  [&out](double t, const MomentState& s) {
                    out.times.push_back(t);
                    out.states.push_back(s);
                  });
  return out;
}

std::vector<MomentState> evolve_ensemble(std::span<const MomentState> initial,
                                         std::span<const BathSpec> baths,
                                         double t_final, double dt_max) {
  check_horizon(t_final, dt_max);
  if (initial.size() != baths.size()) {
    throw DomainError("ensemble needs one bath per initial state");
  }
  const std::size_t count = initial.size();
  std::vector<double> n(count), m(count), nt(count), mt(count), rate(count);
  std::vector<double> min_slack(count, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < count; ++i) {
    if (!is_physical(initial[i].cm())) {
      throw DomainError("initial moments violate the uncertainty relation");
    }
    const MomentState env = bath_moments(baths[i]);
    n[i] = initial[i].n;
    m[i] = initial[i].m;
    nt[i] = env.n;
    mt[i] = env.m;
    rate[i] = baths[i].gamma;
  }
  const std::size_t steps = step_count(t_final, dt_max);
  if (steps > 0) {
    const double h = t_final / static_cast<double>(steps);
    kernels::relax_rk4({n, m, nt, mt, rate, min_slack}, h, steps);
  }
  std::vector<MomentState> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!(min_slack[i] >= -kTrajectoryPhysicalityTolerance)) {
      throw NumericError("ensemble lane " + std::to_string(i) +
                         " left the physical region");
    }
    out[i] = {n[i], m[i]};
  }
  return out;
}

SqueezedThermalState steady_state(const BathSpec& bath) {
  return SqueezedThermalState::squeezed(bath.tau, bath.r_bath);
}

GeneralizedGibbs generalized_gibbs(const BathSpec& bath) {
  const double two_r = 2.0 * bath.r_bath;
  return {std::cosh(two_r) / bath.tau.value(), std::tanh(two_r)};
}

void write_trajectory_csv(std::ostream& out, const MomentTrajectory& trajectory) {
  out << "time,n,m,classicality,energy\n";
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const MomentState& s = trajectory.states[i];
    csv::write_row(out, {trajectory.times[i], s.n, s.m, classicality(s.cm()),
                         s.n + 0.5});
  }
}

}  // namespace sqheat
