#pragma once

// Parameter sweeps behind the command-line tool. Each mode produces one CSV
// data file plus a JSON run manifest next to it.
//
// Configuration documents are JSON objects. Keys (defaults in brackets):
//   mode        classicality-curve | otto-sweep | generalized-sweep |
//               cycle-trace | relaxation | phase-diagram       (required)
//   tau_cold    cold temperature                               (required)
//   tau_hot     hot temperature, > tau_cold                    (required)
//   tau_extra   third curve in classicality-curve              [3]
//   r_min, r_max  squeezing grid bounds, r_min < r_max         [0, 3]
//   points      grid size (>= 2); samples in relaxation        [201]
//   output_path CSV destination                                [<mode>.csv]
//   quad_tol    quadrature relative tolerance in (0, 1e-3]     [1e-10]
//   gamma, t_final, r_bath   relaxation parameters             [1, 20, 0.3]
//   cycle, r_work            cycle-trace engine and squeezing  [otto, 0.5]
// Unknown keys are rejected.

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "sqheat/cycles.hpp"

namespace sqheat {

enum class SweepMode {
  ClassicalityCurve,
  OttoSweep,
  GeneralizedSweep,
  CycleTrace,
  Relaxation,
  PhaseDiagram,
};

[[nodiscard]] std::string_view to_string(SweepMode mode) noexcept;
[[nodiscard]] const std::vector<std::string_view>& sweep_mode_names();

struct SweepSpec {
  SweepMode mode = SweepMode::OttoSweep;
  double tau_cold = 1.0;
  double tau_hot = 2.0;
  double tau_extra = 3.0;
  double r_min = 0.0;
  double r_max = 3.0;
  std::size_t points = 201;
  std::string output_path;
  double quad_tol = 1e-10;
  double gamma = 1.0;
  double t_final = 20.0;
  double r_bath = 0.3;
  CycleKind cycle = CycleKind::Otto;
  double r_work = 0.5;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

inline constexpr std::string_view kToolName = "sqheat";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Validates a JSON configuration document. Throws UsageError listing every
/// problem found (one per line).
[[nodiscard]] SweepSpec parse_config(std::string_view text);
[[nodiscard]] SweepSpec spec_from_json(const nlohmann::json& doc);

/// Full document including defaulted keys; parse_config(serialize(s)) == s.
[[nodiscard]] nlohmann::json to_json(const SweepSpec& spec);
[[nodiscard]] std::string serialize(const SweepSpec& spec);

/// points values r_min + (r_max - r_min) i / (points - 1), both ends exact.
[[nodiscard]] std::vector<double> sweep_grid(const SweepSpec& spec);

/// Header of the CSV written for a mode.
[[nodiscard]] const std::vector<std::string_view>& sweep_columns(SweepMode mode);

/// Writes the mode's CSV (header included) to out. Byte-identical output for
/// identical specs.
void write_sweep_csv(const SweepSpec& spec, std::ostream& out);

/// Manifest written beside `data_path`: same stem, ".manifest.json".
[[nodiscard]] std::filesystem::path manifest_path_for(
    const std::filesystem::path& data_path);

[[nodiscard]] nlohmann::json make_manifest(const SweepSpec& spec,
                                           std::chrono::duration<double> wall_clock);

struct SweepOutcome {
  std::filesystem::path data_path;
  std::filesystem::path manifest_path;
  nlohmann::json manifest;
};

/// Runs the sweep and writes both files. Throws IoError when a file cannot
/// be written; numeric failures propagate as NumericError/ConsistencyError.
SweepOutcome run_sweep(const SweepSpec& spec);

}  // namespace sqheat
