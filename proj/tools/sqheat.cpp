// sqheat: run classicality curves, engine sweeps, cycle traces and
// relaxation trajectories, writing CSV data plus a JSON run manifest.
//
// Exit codes: 0 success, 2 usage error, 3 numeric failure, 4 I/O failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "sqheat/errors.hpp"
#include "sqheat/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct Overrides {
  std::string config_path;
  std::optional<double> tau_cold, tau_hot, tau_extra, r_min, r_max, quad_tol;
  std::optional<double> gamma, t_final, r_bath, r_work;
  std::optional<long long> points;
  std::optional<std::string> output_path, cycle;
};

void add_options(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config_path, "JSON configuration document");
  cmd.add_option("--tau-cold", o.tau_cold, "cold bath temperature k_B T1/(hbar omega)");
  cmd.add_option("--tau-hot", o.tau_hot, "hot bath temperature k_B T2/(hbar omega)");
  cmd.add_option("--tau-extra", o.tau_extra, "third temperature (classicality-curve)");
  cmd.add_option("--r-min", o.r_min, "lower end of the squeezing grid");
  cmd.add_option("--r-max", o.r_max, "upper end of the squeezing grid");
  cmd.add_option("--points", o.points, "grid size / trajectory samples (>= 2)");
  cmd.add_option("-o,--output", o.output_path, "CSV output path");
  cmd.add_option("--quad-tol", o.quad_tol, "quadrature relative tolerance");
  cmd.add_option("--gamma", o.gamma, "relaxation rate (relaxation)");
  cmd.add_option("--t-final", o.t_final, "integration horizon in 1/gamma (relaxation)");
  cmd.add_option("--r-bath", o.r_bath, "bath squeezing (relaxation)");
  cmd.add_option("--cycle", o.cycle, "otto | generalized (cycle-trace)");
  cmd.add_option("--r-work", o.r_work, "working squeezing (cycle-trace)");
}

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sqheat::IoError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return nlohmann::json::parse(text.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw sqheat::UsageError("malformed config file '" + path + "': " + e.what());
  }
}

template <class T>
void overlay(nlohmann::json& doc, const char* key, const std::optional<T>& value) {
  if (value) doc[key] = *value;
}

sqheat::SweepSpec build_spec(const std::string& mode, const Overrides& o) {
  nlohmann::json doc = o.config_path.empty() ? nlohmann::json::object()
                                             : load_config(o.config_path);
  if (!doc.is_object()) throw sqheat::UsageError("config document must be a JSON object");
  doc["mode"] = mode;
  // Temperatures default to the running example when neither the file nor
  // the flags provide them.
  if (!doc.contains("tau_cold") && !o.tau_cold) doc["tau_cold"] = 1.0;
  if (!doc.contains("tau_hot") && !o.tau_hot) doc["tau_hot"] = 2.0;
  overlay(doc, "tau_cold", o.tau_cold);
  overlay(doc, "tau_hot", o.tau_hot);
  overlay(doc, "tau_extra", o.tau_extra);
  overlay(doc, "r_min", o.r_min);
  overlay(doc, "r_max", o.r_max);
  overlay(doc, "points", o.points);
  overlay(doc, "output_path", o.output_path);
  overlay(doc, "quad_tol", o.quad_tol);
  overlay(doc, "gamma", o.gamma);
  overlay(doc, "t_final", o.t_final);
  overlay(doc, "r_bath", o.r_bath);
  overlay(doc, "cycle", o.cycle);
  overlay(doc, "r_work", o.r_work);
  return sqheat::spec_from_json(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Squeezed-bath heat engine simulator (natural units)"};
  app.set_version_flag("--version", std::string(sqheat::kToolVersion));
  app.require_subcommand(1);

  Overrides overrides;
  std::string chosen;
  for (std::string_view name : sqheat::sweep_mode_names()) {
    CLI::App* cmd = app.add_subcommand(std::string(name), "run the " + std::string(name) + " mode");
    add_options(*cmd, overrides);
    cmd->callback([&chosen, name] { chosen = std::string(name); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const sqheat::SweepSpec spec = build_spec(chosen, overrides);
    const sqheat::SweepOutcome outcome = sqheat::run_sweep(spec);
    std::cout << "wrote " << outcome.data_path.string() << " and "
              << outcome.manifest_path.string() << '\n';
    return 0;
  } catch (const sqheat::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sqheat::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sqheat::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const sqheat::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const sqheat::ConsistencyError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
}
