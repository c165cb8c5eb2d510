#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sqheat/errors.hpp"
#include "sqheat/sweep.hpp"

using namespace sqheat;
using doctest::Approx;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string csv_of(const SweepSpec& spec) {
  std::ostringstream out;
  write_sweep_csv(spec, out);
  return out.str();
}

std::string usage_message(std::string_view text) {
  try {
    (void)parse_config(text);
  } catch (const UsageError& e) {
    return e.what();
  }
  return {};
}

std::vector<std::string> split(const std::string& row) {
  std::vector<std::string> out;
  std::istringstream in(row);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("parse_config defaults") {
  const SweepSpec s = parse_config(R"({"mode": "otto-sweep", "tau_cold": 1, "tau_hot": 2})");
  CHECK(s.mode == SweepMode::OttoSweep);
  CHECK(s.r_min == 0.0);
  CHECK(s.r_max == 3.0);
  CHECK(s.points == 201);
  CHECK(s.quad_tol == 1e-10);
  CHECK(s.output_path == "otto-sweep.csv");
  CHECK(s.cycle == CycleKind::Otto);
}

TEST_CASE("parse_config rejections") {
  CHECK(usage_message(R"({"mode": "otto-sweep", "tau_cold": 2, "tau_hot": 1})")
            .find("tau_cold=2, tau_hot=1") != std::string::npos);
  CHECK(usage_message(R"({"mode": "otto-sweep", "tau_cold": 1, "tau_hot": 1})")
            .find("tau_hot must exceed tau_cold") != std::string::npos);
  CHECK(!usage_message(R"({"mode": "warp", "tau_cold": 1, "tau_hot": 2})").empty());
  CHECK(!usage_message(R"({"tau_cold": 1, "tau_hot": 2})").empty());
  CHECK(!usage_message(R"({"mode": "otto-sweep", "tau_cold": 1})").empty());
  CHECK(usage_message(R"({"mode": "otto-sweep", "tau_cold": 1, "tau_hot": 2, "colour": 1})")
            .find("colour") != std::string::npos);
  CHECK(!usage_message("not json").empty());
  CHECK(!usage_message("[1, 2]").empty());
  CHECK(!usage_message(R"({"mode": "otto-sweep", "tau_cold": 1, "tau_hot": 2, "points": 1})")
             .empty());
  CHECK(!usage_message(R"({"mode": "otto-sweep", "tau_cold": 1, "tau_hot": 2, "points": 2.5})")
             .empty());
  CHECK(!usage_message(
             R"({"mode": "otto-sweep", "tau_cold": 1, "tau_hot": 2, "quad_tol": 0.01})")
             .empty());
  CHECK(!usage_message(R"({"mode": "otto-sweep", "tau_cold": 1, "tau_hot": 2, "r_min": -1})")
             .empty());
  CHECK(!usage_message(
             R"({"mode": "otto-sweep", "tau_cold": 1, "tau_hot": 2, "r_min": 2, "r_max": 1})")
             .empty());
  CHECK(!usage_message(
             R"({"mode": "cycle-trace", "tau_cold": 1, "tau_hot": 2, "cycle": "diesel"})")
             .empty());
}

TEST_CASE("every violation is listed") {
  const std::string msg = usage_message(
      R"({"mode": "relaxation", "tau_cold": 3, "tau_hot": 1, "points": 0,
          "gamma": -1, "quad_tol": 0, "extra": true})");
  for (const char* needle :
       {"tau_hot must exceed", "points", "gamma", "quad_tol", "extra"}) {
    CAPTURE(needle);
    CHECK(msg.find(needle) != std::string::npos);
  }
  CHECK(std::count(msg.begin(), msg.end(), '\n') >= 5);
}

TEST_CASE("config round trip") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  std::uniform_int_distribution<int> mode(0, 5);
  std::uniform_int_distribution<std::size_t> pts(2, 5000);
  for (int i = 0; i < 200; ++i) {
    SweepSpec s;
    s.mode = static_cast<SweepMode>(mode(rng));
    s.tau_cold = u(rng);
    s.tau_hot = s.tau_cold + u(rng);
    s.tau_extra = u(rng);
    s.r_min = u(rng);
    s.r_max = s.r_min + u(rng);
    s.points = pts(rng);
    s.output_path = "out/run-" + std::to_string(i) + ".csv";
    s.quad_tol = 1e-4 * u(rng) / 5.0;
    s.gamma = u(rng);
    s.t_final = u(rng);
    s.r_bath = u(rng);
    s.cycle = i % 2 ? CycleKind::Otto : CycleKind::Generalized;
    s.r_work = u(rng);
    CHECK(parse_config(serialize(s)) == s);
  }
}

TEST_CASE("sweep grid") {
  SweepSpec s;
  s.r_min = 0.0;
  s.r_max = 3.0;
  s.points = 301;
  const std::vector<double> g = sweep_grid(s);
  REQUIRE(g.size() == 301);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 3.0);
  CHECK(g[50] == 0.5);
  CHECK(g[100] == 1.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  s.r_min = 0.1;
  s.r_max = 0.7;
  s.points = 2;
  CHECK(sweep_grid(s) == std::vector<double>{0.1, 0.7});
}

TEST_CASE("CSV headers per mode") {
  SweepSpec s;
  s.points = 3;
  s.t_final = 1.0;
  const std::pair<SweepMode, const char*> expected[] = {
      {SweepMode::ClassicalityCurve, "r,C_tau1,C_tau2,C_tau3"},
      {SweepMode::OttoSweep, "r,eta_otto,region"},
      {SweepMode::GeneralizedSweep,
       "r_t,r_R,eta_generalized_ledger,eta_printed_fg,eta_otto,eta_carnot,region"},
      {SweepMode::CycleTrace, "stroke,sample_r,sample_n,classicality"},
      {SweepMode::Relaxation, "time,n,m,classicality,energy"},
      {SweepMode::PhaseDiagram, "r,region,C_at_tau1,C_at_tau2"},
  };
  for (const auto& [mode, header] : expected) {
    CAPTURE(to_string(mode));
    s.mode = mode;
    const auto rows = lines_of(csv_of(s));
    REQUIRE(!rows.empty());
    CHECK(rows.front() == header);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(split(rows[i]).size() == sweep_columns(mode).size());
    }
  }
}

TEST_CASE("otto-sweep row at r = 0.5") {
  SweepSpec s;
  s.mode = SweepMode::OttoSweep;
  s.points = 301;
  const auto rows = lines_of(csv_of(s));
  REQUIRE(rows.size() == 302);
  const auto cells = split(rows[51]);
  CHECK(cells[0] == "0.5");
  CHECK(std::stod(cells[1]) == Approx(0.351945726336115).epsilon(1e-14));
  CHECK(cells[2] == "ii");
}

TEST_CASE("classicality curve crosses zero at critical squeezing") {
  SweepSpec s;
  s.mode = SweepMode::ClassicalityCurve;
  s.points = 3001;
  const auto rows = lines_of(csv_of(s));
  const double taus[] = {s.tau_cold, s.tau_hot, s.tau_extra};
  for (std::size_t k = 0; k < 3; ++k) {
    int crossings = 0;
    double prev_r = 0.0;
    double prev_c = 1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto cells = split(rows[i]);
      const double r = std::stod(cells[0]);
      const double c = std::stod(cells[k + 1]);
      if (prev_c > 0.0 && c <= 0.0) {
        ++crossings;
        const double rc = critical_squeezing(Temperature(taus[k]));
        CHECK(rc > prev_r);
        CHECK(rc <= r);
      }
      prev_r = r;
      prev_c = c;
    }
    CHECK(crossings == 1);
  }
}

TEST_CASE("phase diagram and generalized sweep rows") {
  SweepSpec s;
  s.mode = SweepMode::PhaseDiagram;
  s.points = 4;
  s.r_max = 1.5;
  const auto rows = lines_of(csv_of(s));
  CHECK(split(rows[1])[1] == "i");
  CHECK(split(rows[2])[1] == "ii");
  CHECK(split(rows[3])[1] == "iii");

  s.mode = SweepMode::GeneralizedSweep;
  s.r_min = 0.5;
  s.r_max = 1.0;
  s.points = 2;
  const auto g = split(lines_of(csv_of(s))[1]);
  CHECK(std::stod(g[1]) == Approx(0.817446140420995).epsilon(1e-13));
  CHECK(std::stod(g[2]) == Approx(0.522327177924508).epsilon(1e-10));
  CHECK(std::stod(g[3]) == Approx(0.937731010959298).epsilon(1e-13));
  CHECK(std::stod(g[5]) == 0.5);
  CHECK(g[6] == "ii");
}

TEST_CASE("cycle-trace and relaxation outputs") {
  SweepSpec s;
  s.mode = SweepMode::CycleTrace;
  s.cycle = CycleKind::Generalized;
  const auto trace = lines_of(csv_of(s));
  CHECK(trace.size() == 1 + 4 * kTraceSamplesPerStroke);
  CHECK(split(trace[1])[0] == "squeeze");

  s.mode = SweepMode::Relaxation;
  s.points = 11;
  const auto relax = lines_of(csv_of(s));
  REQUIRE(relax.size() == 12);
  const auto last = split(relax.back());
  CHECK(std::stod(last[0]) == 20.0);
  CHECK(std::stod(last[1]) == Approx(1.92012022809478).epsilon(1e-6));
  CHECK(std::stod(last[2]) == Approx(1.29972452058149).epsilon(1e-6));
}

TEST_CASE("outputs are deterministic") {
  for (SweepMode mode : {SweepMode::ClassicalityCurve, SweepMode::OttoSweep,
                         SweepMode::GeneralizedSweep, SweepMode::CycleTrace,
                         SweepMode::Relaxation, SweepMode::PhaseDiagram}) {
    SweepSpec s;
    s.mode = mode;
    s.points = 101;
    CAPTURE(to_string(mode));
    CHECK(csv_of(s) == csv_of(s));
  }
}

TEST_CASE("run_sweep writes data and manifest") {
  const fs::path dir = fs::temp_directory_path() / "sqheat_test_sweep";
  fs::remove_all(dir);
  fs::create_directories(dir);
  SweepSpec s;
  s.mode = SweepMode::CycleTrace;
  s.output_path = (dir / "trace.csv").string();
  const SweepOutcome out = run_sweep(s);
  CHECK(out.data_path == dir / "trace.csv");
  CHECK(out.manifest_path == dir / "trace.manifest.json");
  REQUIRE(fs::exists(out.data_path));
  REQUIRE(fs::exists(out.manifest_path));

  std::ifstream in(out.manifest_path);
  const nlohmann::json m = nlohmann::json::parse(in);
  CHECK(m["tool"] == "sqheat");
  CHECK(m["version"] == std::string(kToolVersion));
  CHECK(m["data_file"] == s.output_path);
  CHECK(m["columns"].size() == 4);
  CHECK(m["spec"]["mode"] == "cycle-trace");
  CHECK(m["wall_clock_seconds"].get<double>() >= 0.0);
  CHECK(m.contains("units"));
  CHECK(m.contains("kernel_isa"));
  CHECK(m["cycle_report"]["kind"] == "otto");

  std::ifstream data(out.data_path);
  std::stringstream buffer;
  buffer << data.rdbuf();
  CHECK(buffer.str() == csv_of(s));

  s.output_path = (dir / "missing" / "x.csv").string();
  CHECK_THROWS_AS((void)run_sweep(s), IoError);
  fs::remove_all(dir);
}
