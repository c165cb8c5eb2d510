#pragma once

// Batched inner loops used by sweeps, cycle traces and ensemble relaxation.
//
// Every kernel has a scalar reference implementation; vector variants
// (AVX2 on x86-64, NEON on AArch64) are picked at runtime from what the CPU
// reports. All variants agree with the reference to a few ulps.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace sqheat::kernels {

enum class Isa { Scalar, Avx2, Neon };

[[nodiscard]] std::string_view isa_name(Isa isa) noexcept;

/// Best variant supported by this build on this CPU.
[[nodiscard]] Isa active_isa() noexcept;

/// Every variant usable here, Scalar first.
[[nodiscard]] std::vector<Isa> available_isas();

/// out[i] = (n_th[i] + 1/2) e^{-2 r[i]} - 1/2. Requires r[i] >= 0.
void classicality(Isa isa, std::span<const double> n_th,
                  std::span<const double> r, std::span<double> out);
void classicality(std::span<const double> n_th, std::span<const double> r,
                  std::span<double> out);

/// out[i] = 1 if n_cm[i] >= |m_cm[i]| else 0. No physicality check.
void p_representable(Isa isa, std::span<const double> n_cm,
                     std::span<const double> m_cm, std::span<std::uint8_t> out);
void p_representable(std::span<const double> n_cm, std::span<const double> m_cm,
                     std::span<std::uint8_t> out);

/// Structure-of-arrays view over independent moment trajectories relaxing
/// linearly towards (n_target, m_target) at `rate`.
struct RelaxLanes {
  std::span<double> n;
  std::span<double> m;
  std::span<const double> n_target;
  std::span<const double> m_target;
  std::span<const double> rate;
  /// Running minimum of n (n + 1) - m^2 over the initial and every stepped
  /// state; the caller seeds it (e.g. with +infinity).
  std::span<double> min_slack;
};

/// Advances every lane by `steps` classical fourth-order Runge-Kutta steps
/// of size h.
void relax_rk4(Isa isa, const RelaxLanes& lanes, double h, std::size_t steps);
void relax_rk4(const RelaxLanes& lanes, double h, std::size_t steps);

}  // namespace sqheat::kernels
