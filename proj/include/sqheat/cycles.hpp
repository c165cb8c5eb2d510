#pragma once

// Four-stroke engines whose work parameter is the squeezing of the mode.
// Both cycles run between a cold thermal bath (tau_cold) and a hot squeezed
// thermal bath (tau_hot):
//
//   A -> B  unitary squeeze 0 -> r at the cold occupancy
//   B -> C  contact with the hot squeezed bath
//   C -> D  unitary unsqueeze back to r = 0 at the hot occupancy
//   D -> A  contact with the cold thermal bath
//
// Otto: B -> C happens at fixed r and the hot bath is squeezed by r.
// Generalized: B -> C follows the curve of constant classicality from
// (n_cold, r_t) to (n_hot, r_R) while the bath is squeezed by r_R.
//
// Stroke records store work done ON the mode and heat flowing INTO it.

#include <array>
#include <string_view>
#include <vector>

#include "sqheat/gaussian.hpp"
#include "sqheat/quadrature.hpp"

namespace sqheat {

enum class CycleKind { Otto, Generalized };
enum class StrokeKind { Squeeze, HotContact, Unsqueeze, ColdContact };
enum class Region { I, II, III, Boundary };

[[nodiscard]] std::string_view to_string(CycleKind kind) noexcept;
[[nodiscard]] std::string_view to_string(StrokeKind kind) noexcept;
[[nodiscard]] std::string_view to_string(Region region) noexcept;

/// tau_hot >= tau_cold; equal temperatures are accepted as a degenerate
/// engine that does nothing.
struct EngineConfig {
  Temperature tau_cold;
  Temperature tau_hot;
  double r_work;
  CycleKind kind;

  EngineConfig(Temperature cold, Temperature hot, double r, CycleKind k);
};

struct StrokeRecord {
  StrokeKind label;
  SqueezedThermalState state_in;
  SqueezedThermalState state_out;
  double work_on;
  double heat_in;
};

struct TracePoint {
  StrokeKind stroke;
  double r;
  double n_th;
  double classicality;
};

struct CycleReport {
  CycleKind kind;
  EngineConfig config;
  std::array<StrokeRecord, 4> strokes;
  double w_net_extracted;
  double q_hot_in;
  double q_cold_out;
  /// w_net_extracted / q_hot_in, or 0 when no heat is absorbed.
  double efficiency;
  std::vector<TracePoint> classicality_trace;
  Region region;
};

inline constexpr std::size_t kTraceSamplesPerStroke = 256;

// Per-stroke and per-cycle energy balance tolerance.
inline constexpr double kLedgerTolerance = 1e-9;

[[nodiscard]] CycleReport run_otto(const EngineConfig& cfg);

/// 1 - 1 / cosh 2r.
[[nodiscard]] double otto_efficiency(double r);

/// Hot-bath squeezing that keeps C(n_cold, r_t) = C(n_hot, r_R):
/// r_R = r_t + ln((n_hot + 1/2) / (n_cold + 1/2)) / 2.
[[nodiscard]] double generalized_r_hot(const EngineConfig& cfg);

/// Occupancy on the constant-classicality curve through (n_start, r_start):
/// n(r) + 1/2 = (n_start + 1/2) e^{2 (r - r_start)}.
[[nodiscard]] double iso_classicality_occupancy(double n_start, double r_start,
                                                double r);

[[nodiscard]] CycleReport run_generalized(
    const EngineConfig& cfg, double quad_tol = kDefaultQuadTolerance);

/// Dispatches on cfg.kind.
[[nodiscard]] CycleReport run_cycle(const EngineConfig& cfg,
                                    double quad_tol = kDefaultQuadTolerance);

struct PrintedEfficiency {
  double f;
  double g;
  double efficiency;  // 1 - f / g
};

/// The "printed" closed-form 1 - f/g efficiency, evaluated
/// term by term. It does not agree with the stroke ledger (it exceeds 1 near
/// r_t = 0 where g turns negative) and is kept only for comparison;
/// run_generalized is authoritative.
[[nodiscard]] PrintedEfficiency generalized_efficiency_closed_form(
    const EngineConfig& cfg);

/// 1 - tau_cold / tau_hot.
[[nodiscard]] double carnot_efficiency(const EngineConfig& cfg);

/// i: r < r_c(cold); ii: r_c(cold) <= r < r_c(hot); iii: r >= r_c(hot).
/// Within 1e-12 of either threshold the region is Boundary.
[[nodiscard]] Region classify_region(const EngineConfig& cfg);

}  // namespace sqheat
