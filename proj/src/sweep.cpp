#include "sqheat/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "sqheat/csv.hpp"
#include "sqheat/errors.hpp"
#include "sqheat/gaussian.hpp"
#include "sqheat/kernels.hpp"
#include "sqheat/lindblad.hpp"
#include "sqheat/report_json.hpp"

namespace sqheat {

namespace {

using nlohmann::json;

constexpr std::array<SweepMode, 6> kModes = {
    SweepMode::ClassicalityCurve, SweepMode::OttoSweep,  SweepMode::GeneralizedSweep,
    SweepMode::CycleTrace,        SweepMode::Relaxation, SweepMode::PhaseDiagram,
};

const std::vector<std::string_view> kKnownKeys = {
    "mode",   "tau_cold", "tau_hot", "tau_extra", "r_min",  "r_max",  "points",
    "output_path", "quad_tol", "gamma", "t_final", "r_bath", "cycle", "r_work",
};

// Collects every violation before reporting.
class Validator {
 public:
  explicit Validator(const json& doc) : doc_(doc) {}

  void number(std::string_view key, double& out, bool required = false) {
    const auto it = doc_.find(std::string(key));
    if (it == doc_.end()) {
      if (required) fail(std::string(key) + ": required key is missing");
      return;
    }
    if (!it->is_number()) {
      fail(std::string(key) + ": expected a number");
      return;
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
      fail(std::string(key) + ": must be finite");
      return;
    }
    out = v;
  }

  void count(std::string_view key, std::size_t& out) {
    const auto it = doc_.find(std::string(key));
    if (it == doc_.end()) return;
    if (!it->is_number_integer()) {
      fail(std::string(key) + ": expected an integer");
      return;
    }
    if (it->is_number_unsigned()) {
      out = it->get<std::size_t>();
    } else {
      const auto v = it->get<long long>();
      if (v < 0) {
        fail(std::string(key) + ": must be >= 2, got " + std::to_string(v));
        return;
      }
      out = static_cast<std::size_t>(v);
    }
  }

  bool text(std::string_view key, std::string& out, bool required = false) {
    const auto it = doc_.find(std::string(key));
    if (it == doc_.end()) {
      if (required) fail(std::string(key) + ": required key is missing");
      return false;
    }
    if (!it->is_string()) {
      fail(std::string(key) + ": expected a string");
      return false;
    }
    out = it->get<std::string>();
    return true;
  }

  void fail(std::string message) { errors_.push_back(std::move(message)); }

  void raise_if_any() const {
    if (errors_.empty()) return;
    std::string msg = "invalid sweep configuration:";
    for (const std::string& e : errors_) msg += "\n  " + e;
    throw UsageError(msg);
  }

 private:
  const json& doc_;
  std::vector<std::string> errors_;
};

std::string describe(double v) { return csv::format_number(v); }

// Shared grid construction for the r-indexed modes.
std::vector<double> fill(std::size_t count, double value) {
  return std::vector<double>(count, value);
}

void write_header(std::ostream& out, SweepMode mode) {
  const auto& cols = sweep_columns(mode);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i > 0) out << ',';
    out << cols[i];
  }
  out << '\n';
}

void classicality_curve(const SweepSpec& spec, std::ostream& out) {
  const std::vector<double> r = sweep_grid(spec);
  std::array<std::vector<double>, 3> c;
  const std::array<double, 3> taus = {spec.tau_cold, spec.tau_hot, spec.tau_extra};
  for (std::size_t k = 0; k < 3; ++k) {
    c[k].resize(r.size());
    kernels::classicality(fill(r.size(), bose_einstein(Temperature(taus[k]))), r, c[k]);
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    csv::write_row(out, {r[i], c[0][i], c[1][i], c[2][i]});
  }
}

void otto_sweep(const SweepSpec& spec, std::ostream& out) {
  for (double r : sweep_grid(spec)) {
    const CycleReport rep = run_otto(EngineConfig(
        Temperature(spec.tau_cold), Temperature(spec.tau_hot), r, CycleKind::Otto));
    csv::write_row(out, {r, rep.efficiency, to_string(rep.region)});
  }
}

void generalized_sweep(const SweepSpec& spec, std::ostream& out) {
  const Temperature cold(spec.tau_cold);
  const Temperature hot(spec.tau_hot);
  for (double r : sweep_grid(spec)) {
    const EngineConfig gen(cold, hot, r, CycleKind::Generalized);
    const CycleReport g = run_generalized(gen, spec.quad_tol);
    const CycleReport o = run_otto(EngineConfig(cold, hot, r, CycleKind::Otto));
    csv::write_row(out, {r, generalized_r_hot(gen), g.efficiency,
                         generalized_efficiency_closed_form(gen).efficiency,
                         o.efficiency, carnot_efficiency(gen), to_string(g.region)});
  }
}

CycleReport trace_report(const SweepSpec& spec) {
  return run_cycle(EngineConfig(Temperature(spec.tau_cold), Temperature(spec.tau_hot),
                                spec.r_work, spec.cycle),
                   spec.quad_tol);
}

void cycle_trace(const SweepSpec& spec, std::ostream& out) {
  const CycleReport rep = trace_report(spec);
  for (const TracePoint& p : rep.classicality_trace) {
    csv::write_row(out, {to_string(p.stroke), p.r, p.n_th, p.classicality});
  }
}

void relaxation(const SweepSpec& spec, std::ostream& out) {
  const BathSpec bath(Temperature(spec.tau_hot), spec.r_bath, spec.gamma);
  const SqueezedThermalState start = SqueezedThermalState::thermal(Temperature(spec.tau_cold));
  const MomentTrajectory traj = evolve_sampled({start.n_th(), 0.0}, bath, spec.t_final,
                                               default_dt_max(bath), spec.points);
  write_trajectory_csv(out, traj);
}

void phase_diagram(const SweepSpec& spec, std::ostream& out) {
  const Temperature cold(spec.tau_cold);
  const Temperature hot(spec.tau_hot);
  const std::vector<double> r = sweep_grid(spec);
  std::vector<double> c_cold(r.size());
  std::vector<double> c_hot(r.size());
  kernels::classicality(fill(r.size(), bose_einstein(cold)), r, c_cold);
  kernels::classicality(fill(r.size(), bose_einstein(hot)), r, c_hot);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Region region = classify_region(EngineConfig(cold, hot, r[i], CycleKind::Otto));
    csv::write_row(out, {r[i], to_string(region), c_cold[i], c_hot[i]});
  }
}

}  // namespace

std::string_view to_string(SweepMode mode) noexcept {
  switch (mode) {
    case SweepMode::ClassicalityCurve:
      return "classicality-curve";
    case SweepMode::OttoSweep:
      return "otto-sweep";
    case SweepMode::GeneralizedSweep:
      return "generalized-sweep";
    case SweepMode::CycleTrace:
      return "cycle-trace";
    case SweepMode::Relaxation:
      return "relaxation";
    case SweepMode::PhaseDiagram:
      return "phase-diagram";
  }
  return "unknown";
}

const std::vector<std::string_view>& sweep_mode_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (SweepMode m : kModes) out.push_back(to_string(m));
    return out;
  }();
  return names;
}

SweepSpec parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid sweep configuration:\n  malformed JSON: ") +
                     e.what());
  }
  return spec_from_json(doc);
}

SweepSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw UsageError("invalid sweep configuration:\n  document must be a JSON object");
  }
  Validator v(doc);
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      v.fail(key + ": unknown key");
    }
  }

  SweepSpec spec;
  std::string mode_name;
  bool have_mode = false;
  if (v.text("mode", mode_name, true)) {
    for (SweepMode m : kModes) {
      if (to_string(m) == mode_name) {
        spec.mode = m;
        have_mode = true;
      }
    }
    if (!have_mode) v.fail("mode: unknown mode '" + mode_name + "'");
  }

  double tau_cold = std::numeric_limits<double>::quiet_NaN();
  double tau_hot = std::numeric_limits<double>::quiet_NaN();
  v.number("tau_cold", tau_cold, true);
  v.number("tau_hot", tau_hot, true);
  v.number("tau_extra", spec.tau_extra);
  v.number("r_min", spec.r_min);
  v.number("r_max", spec.r_max);
  v.count("points", spec.points);
  v.number("quad_tol", spec.quad_tol);
  v.number("gamma", spec.gamma);
  v.number("t_final", spec.t_final);
  v.number("r_bath", spec.r_bath);
  v.number("r_work", spec.r_work);

  if (!std::isnan(tau_cold) && !(tau_cold > 0.0)) {
    v.fail("tau_cold: must be > 0, got " + describe(tau_cold));
  }
  if (!std::isnan(tau_hot) && !(tau_hot > 0.0)) {
    v.fail("tau_hot: must be > 0, got " + describe(tau_hot));
  }
  if (!std::isnan(tau_cold) && !std::isnan(tau_hot) && !(tau_hot > tau_cold)) {
    v.fail("tau_hot must exceed tau_cold (tau_cold=" + describe(tau_cold) +
           ", tau_hot=" + describe(tau_hot) + ")");
  }
  spec.tau_cold = tau_cold;
  spec.tau_hot = tau_hot;
  if (!(spec.tau_extra > 0.0)) v.fail("tau_extra: must be > 0");
  if (!(spec.r_min >= 0.0)) v.fail("r_min: must be >= 0, got " + describe(spec.r_min));
  if (!(spec.r_min < spec.r_max)) {
    v.fail("r_min must be below r_max (r_min=" + describe(spec.r_min) +
           ", r_max=" + describe(spec.r_max) + ")");
  }
  if (spec.points < 2) v.fail("points: must be >= 2, got " + std::to_string(spec.points));
  if (!(spec.quad_tol > 0.0 && spec.quad_tol <= 1e-3)) {
    v.fail("quad_tol: must lie in (0, 1e-3], got " + describe(spec.quad_tol));
  }
  if (!(spec.gamma > 0.0)) v.fail("gamma: must be > 0, got " + describe(spec.gamma));
  if (!(spec.t_final > 0.0)) v.fail("t_final: must be > 0, got " + describe(spec.t_final));
  if (!(spec.r_bath >= 0.0)) v.fail("r_bath: must be >= 0, got " + describe(spec.r_bath));
  if (!(spec.r_work >= 0.0)) v.fail("r_work: must be >= 0, got " + describe(spec.r_work));

  std::string cycle_name;
  if (v.text("cycle", cycle_name)) {
    if (cycle_name == "otto") {
      spec.cycle = CycleKind::Otto;
    } else if (cycle_name == "generalized") {
      spec.cycle = CycleKind::Generalized;
    } else {
      v.fail("cycle: expected 'otto' or 'generalized', got '" + cycle_name + "'");
    }
  }
  if (v.text("output_path", spec.output_path) && spec.output_path.empty()) {
    v.fail("output_path: must not be empty");
  }
  v.raise_if_any();

  if (spec.output_path.empty()) spec.output_path = std::string(to_string(spec.mode)) + ".csv";
  return spec;
}

json to_json(const SweepSpec& spec) {
  return {
      {"mode", std::string(to_string(spec.mode))},
      {"tau_cold", spec.tau_cold},
      {"tau_hot", spec.tau_hot},
      {"tau_extra", spec.tau_extra},
      {"r_min", spec.r_min},
      {"r_max", spec.r_max},
      {"points", spec.points},
      {"output_path", spec.output_path},
      {"quad_tol", spec.quad_tol},
      {"gamma", spec.gamma},
      {"t_final", spec.t_final},
      {"r_bath", spec.r_bath},
      {"cycle", std::string(to_string(spec.cycle))},
      {"r_work", spec.r_work},
  };
}

std::string serialize(const SweepSpec& spec) { return to_json(spec).dump(2); }

std::vector<double> sweep_grid(const SweepSpec& spec) {
  std::vector<double> out(spec.points);
  const double width = spec.r_max - spec.r_min;
  const double intervals = static_cast<double>(spec.points - 1);
  for (std::size_t i = 0; i < spec.points; ++i) {
    out[i] = spec.r_min + width * static_cast<double>(i) / intervals;
  }
  out.back() = spec.r_max;
  return out;
}

const std::vector<std::string_view>& sweep_columns(SweepMode mode) {
  static const std::map<SweepMode, std::vector<std::string_view>> columns = {
      {SweepMode::ClassicalityCurve, {"r", "C_tau1", "C_tau2", "C_tau3"}},
      {SweepMode::OttoSweep, {"r", "eta_otto", "region"}},
      {SweepMode::GeneralizedSweep,
       {"r_t", "r_R", "eta_generalized_ledger", "eta_printed_fg", "eta_otto",
        "eta_carnot", "region"}},
      {SweepMode::CycleTrace, {"stroke", "sample_r", "sample_n", "classicality"}},
      {SweepMode::Relaxation, {"time", "n", "m", "classicality", "energy"}},
      {SweepMode::PhaseDiagram, {"r", "region", "C_at_tau1", "C_at_tau2"}},
  };
  return columns.at(mode);
}

void write_sweep_csv(const SweepSpec& spec, std::ostream& out) {
  switch (spec.mode) {
    case SweepMode::ClassicalityCurve:
      write_header(out, spec.mode);
      return classicality_curve(spec, out);
    case SweepMode::OttoSweep:
      write_header(out, spec.mode);
      return otto_sweep(spec, out);
    case SweepMode::GeneralizedSweep:
      write_header(out, spec.mode);
      return generalized_sweep(spec, out);
    case SweepMode::CycleTrace:
      write_header(out, spec.mode);
      return cycle_trace(spec, out);
    case SweepMode::Relaxation:
      // The trajectory writer emits its own header.
      return relaxation(spec, out);
    case SweepMode::PhaseDiagram:
      write_header(out, spec.mode);
      return phase_diagram(spec, out);
  }
}

std::filesystem::path manifest_path_for(const std::filesystem::path& data_path) {
  std::filesystem::path out = data_path;
  out.replace_extension(".manifest.json");
  return out;
}

json make_manifest(const SweepSpec& spec, std::chrono::duration<double> wall_clock) {
  json columns = json::array();
  for (std::string_view c : sweep_columns(spec.mode)) columns.push_back(std::string(c));
  json manifest = {
      {"tool", std::string(kToolName)},
      {"version", std::string(kToolVersion)},
      {"units",
       "natural units: hbar = omega = k_B = 1; temperatures are k_B T / (hbar omega), "
       "energies are in units of hbar omega, times in units of 1/gamma"},
      {"spec", to_json(spec)},
      {"data_file", spec.output_path},
      {"columns", std::move(columns)},
      {"kernel_isa", std::string(kernels::isa_name(kernels::active_isa()))},
      {"wall_clock_seconds", wall_clock.count()},
  };
  if (spec.mode == SweepMode::CycleTrace) {
    manifest["cycle_report"] = to_json(trace_report(spec));
  }
  return manifest;
}

SweepOutcome run_sweep(const SweepSpec& spec) {
  const auto started = std::chrono::steady_clock::now();
  std::ostringstream data;
  write_sweep_csv(spec, data);
  const auto elapsed = std::chrono::steady_clock::now() - started;

  SweepOutcome outcome;
  outcome.data_path = spec.output_path;
  outcome.manifest_path = manifest_path_for(outcome.data_path);
  outcome.manifest = make_manifest(spec, elapsed);

  auto write_file = [](const std::filesystem::path& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
    file << content;
    file.flush();
    if (!file) throw IoError("failed writing '" + path.string() + "'");
  };
  write_file(outcome.data_path, data.str());
  write_file(outcome.manifest_path, outcome.manifest.dump(2) + "\n");
  return outcome;
}

}  // namespace sqheat
