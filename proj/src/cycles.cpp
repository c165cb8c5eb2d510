#include "sqheat/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "sqheat/errors.hpp"
#include "sqheat/kernels.hpp"
#include "sqheat/lindblad.hpp"
#include "sqheat/thermo.hpp"

namespace sqheat {

namespace {

// Bath contacts are complete relaxations, so the rate only labels the bath.
constexpr double kBathRate = 1.0;

double squeeze_work(double n_th, double r) {
  // (n + 1/2)(cosh 2r - 1), written without cancellation.
  const double sh = std::sinh(r);
  return 2.0 * (n_th + 0.5) * sh * sh;
}

double energy_scale(const StrokeRecord& s) {
  return std::max({1.0, std::abs(internal_energy(s.state_in)),
                   std::abs(internal_energy(s.state_out))});
}

void check_first_law(const StrokeRecord& s) {
  const double dE = internal_energy(s.state_out) - internal_energy(s.state_in);
  const double residual = s.work_on + s.heat_in - dE;
  if (!(std::abs(residual) <= kLedgerTolerance * energy_scale(s))) {
    std::ostringstream msg;
    msg << "first law violated on " << to_string(s.label)
        << " stroke: residual " << residual;
    throw ConsistencyError(msg.str());
  }
}

// Samples `count` points from a to b inclusive.
double lerp_sample(double a, double b, std::size_t i, std::size_t count) {
  if (i + 1 == count) return b;
  const double t = static_cast<double>(i) / static_cast<double>(count - 1);
  return a + (b - a) * t;
}

struct TraceBuilder {
  std::vector<StrokeKind> strokes;
  std::vector<double> r;
  std::vector<double> n;

  template <class RofI, class NofI>
  void add(StrokeKind kind, RofI r_of, NofI n_of) {
    for (std::size_t i = 0; i < kTraceSamplesPerStroke; ++i) {
      strokes.push_back(kind);
      r.push_back(r_of(i));
      n.push_back(n_of(i));
    }
  }

  std::vector<TracePoint> finish() const {
    std::vector<double> c(r.size());
    kernels::classicality(n, r, c);
    std::vector<TracePoint> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = {strokes[i], r[i], n[i], c[i]};
    return out;
  }
};

CycleReport assemble(const EngineConfig& cfg, std::array<StrokeRecord, 4> strokes,
                     std::vector<TracePoint> trace) {
  double total = 0.0;
  double work_on = 0.0;
  for (const StrokeRecord& s : strokes) {
    check_first_law(s);
    total += s.work_on + s.heat_in;
    work_on += s.work_on;
  }
  const double scale = std::max(
      {energy_scale(strokes[0]), energy_scale(strokes[1]), energy_scale(strokes[2])});
  if (!(std::abs(total) <= kLedgerTolerance * scale)) {
    throw ConsistencyError("cycle does not close: net energy change " +
                           std::to_string(total));
  }
  if (!(strokes[3].state_out == strokes[0].state_in)) {
    throw ConsistencyError("cycle does not return to its initial state");
  }

  const double w_net = -work_on;
  const double q_hot = strokes[1].heat_in;
  const double q_cold = -strokes[3].heat_in;
  if (!(std::abs(w_net - (q_hot - q_cold)) <= kLedgerTolerance * scale)) {
    throw ConsistencyError("net work differs from q_hot - q_cold");
  }
  const double efficiency = q_hot > 0.0 ? w_net / q_hot : 0.0;
  if (w_net > 0.0 && !(efficiency >= 0.0 && efficiency < 1.0)) {
    throw ConsistencyError("efficiency outside [0, 1) for a working engine");
  }
  return CycleReport{cfg.kind, cfg,    strokes, w_net, q_hot, q_cold, efficiency,
                     std::move(trace), classify_region(cfg)};
}

}  // namespace

std::string_view to_string(CycleKind kind) noexcept {
  switch (kind) {
    case CycleKind::Otto:
      return "otto";
    case CycleKind::Generalized:
      return "generalized";
  }
  return "unknown";
}

std::string_view to_string(StrokeKind kind) noexcept {
  switch (kind) {
    case StrokeKind::Squeeze:
      return "squeeze";
    case StrokeKind::HotContact:
      return "hot-contact";
    case StrokeKind::Unsqueeze:
      return "unsqueeze";
    case StrokeKind::ColdContact:
      return "cold-contact";
  }
  return "unknown";
}

std::string_view to_string(Region region) noexcept {
  switch (region) {
    case Region::I:
      return "i";
    case Region::II:
      return "ii";
    case Region::III:
      return "iii";
    case Region::Boundary:
      return "boundary";
  }
  return "unknown";
}

EngineConfig::EngineConfig(Temperature cold, Temperature hot, double r, CycleKind k)
    : tau_cold(cold), tau_hot(hot), r_work(r), kind(k) {
  if (hot < cold) {
    throw DomainError("hot bath must not be colder than the cold bath (tau_cold=" +
                      std::to_string(cold.value()) +
                      ", tau_hot=" + std::to_string(hot.value()) + ")");
  }
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("working squeezing must be finite and >= 0");
  }
}

CycleReport run_otto(const EngineConfig& cfg) {
  if (cfg.kind != CycleKind::Otto) throw DomainError("run_otto needs an Otto config");
  const double r = cfg.r_work;
  const SqueezedThermalState a = SqueezedThermalState::thermal(cfg.tau_cold);
  const SqueezedThermalState b{a.n_th(), r};
  const SqueezedThermalState c = steady_state(BathSpec(cfg.tau_hot, r, kBathRate));
  const SqueezedThermalState d{c.n_th(), 0.0};
  const double n1 = a.n_th();
  const double n2 = c.n_th();

  const std::array<StrokeRecord, 4> strokes{{
      {StrokeKind::Squeeze, a, b, squeeze_work(n1, r), 0.0},
      {StrokeKind::HotContact, b, c, 0.0, (n2 - n1) * std::cosh(2.0 * r)},
      {StrokeKind::Unsqueeze, c, d, -squeeze_work(n2, r), 0.0},
      {StrokeKind::ColdContact, d, a, 0.0, n1 - n2},
  }};

  const std::size_t k = kTraceSamplesPerStroke;
  TraceBuilder trace;
  trace.add(StrokeKind::Squeeze, [&](std::size_t i) { return lerp_sample(0.0, r, i, k); },
            [&](std::size_t) { return n1; });
  trace.add(StrokeKind::HotContact, [&](std::size_t) { return r; },
            [&](std::size_t i) { return lerp_sample(n1, n2, i, k); });
  trace.add(StrokeKind::Unsqueeze, [&](std::size_t i) { return lerp_sample(r, 0.0, i, k); },
            [&](std::size_t) { return n2; });
  trace.add(StrokeKind::ColdContact, [&](std::size_t) { return 0.0; },
            [&](std::size_t i) { return lerp_sample(n2, n1, i, k); });

  return assemble(cfg, strokes, trace.finish());
}

double otto_efficiency(double r) {
  if (!(r >= 0.0)) throw DomainError("squeezing must be >= 0");
  return 1.0 - 1.0 / std::cosh(2.0 * r);
}

double generalized_r_hot(const EngineConfig& cfg) {
  const double a_cold = bose_einstein(cfg.tau_cold) + 0.5;
  const double a_hot = bose_einstein(cfg.tau_hot) + 0.5;
  return cfg.r_work + 0.5 * std::log(a_hot / a_cold);
}

double iso_classicality_occupancy(double n_start, double r_start, double r) {
  return (n_start + 0.5) * std::exp(2.0 * (r - r_start)) - 0.5;
}

CycleReport run_generalized(const EngineConfig& cfg, double quad_tol) {
  if (cfg.kind != CycleKind::Generalized) {
    throw DomainError("run_generalized needs a Generalized config");
  }
  const double r_t = cfg.r_work;
  const double r_hot = generalized_r_hot(cfg);
  const SqueezedThermalState a = SqueezedThermalState::thermal(cfg.tau_cold);
  const SqueezedThermalState b{a.n_th(), r_t};
  const SqueezedThermalState c = steady_state(BathSpec(cfg.tau_hot, r_hot, kBathRate));
  const SqueezedThermalState d{c.n_th(), 0.0};
  const double n1 = a.n_th();
  const double n2 = c.n_th();

  const double span = r_hot - r_t;
  const ThermoPath iso = ThermoPath::smooth(
      [=](double s) { return r_t + span * s; },
      [=](double s) { return iso_classicality_occupancy(n1, r_t, r_t + span * s); },
      [=](double) { return span; },
      [=](double s) { return 2.0 * span * (n1 + 0.5) * std::exp(2.0 * span * s); });
  const EnergyDelta hot = work_heat_along(iso, quad_tol);

  const std::array<StrokeRecord, 4> strokes{{
      {StrokeKind::Squeeze, a, b, squeeze_work(n1, r_t), 0.0},
      {StrokeKind::HotContact, b, c, hot.work_on, hot.heat_in},
      {StrokeKind::Unsqueeze, c, d, -squeeze_work(n2, r_hot), 0.0},
      {StrokeKind::ColdContact, d, a, 0.0, n1 - n2},
  }};

  const std::size_t k = kTraceSamplesPerStroke;
  TraceBuilder trace;
  trace.add(StrokeKind::Squeeze, [&](std::size_t i) { return lerp_sample(0.0, r_t, i, k); },
            [&](std::size_t) { return n1; });
  trace.add(StrokeKind::HotContact,
            [&](std::size_t i) { return lerp_sample(r_t, r_hot, i, k); },
            [&](std::size_t i) {
              return i + 1 == k ? n2
                                : iso_classicality_occupancy(
                                      n1, r_t, lerp_sample(r_t, r_hot, i, k));
            });
  trace.add(StrokeKind::Unsqueeze,
            [&](std::size_t i) { return lerp_sample(r_hot, 0.0, i, k); },
            [&](std::size_t) { return n2; });
  trace.add(StrokeKind::ColdContact, [&](std::size_t) { return 0.0; },
            [&](std::size_t i) { return lerp_sample(n2, n1, i, k); });

  return assemble(cfg, strokes, trace.finish());
}

CycleReport run_cycle(const EngineConfig& cfg, double quad_tol) {
  return cfg.kind == CycleKind::Otto ? run_otto(cfg) : run_generalized(cfg, quad_tol);
}

PrintedEfficiency generalized_efficiency_closed_form(const EngineConfig& cfg) {
  // Arguments hbar omega / (2 k_B T) in natural units.
  const double x1 = 0.5 / cfg.tau_cold.value();
  const double x2 = 0.5 / cfg.tau_hot.value();
  const double coth1 = 1.0 / std::tanh(x1);
  const double coth2 = 1.0 / std::tanh(x2);
  const double tanh1 = std::tanh(x1);
  const double e2 = std::exp(2.0 * cfg.r_work);
  const double e4 = std::exp(4.0 * cfg.r_work);

  const double f = 4.0 * e2 * (coth2 - coth1);
  const double g = (e4 * tanh1 * coth2 * coth2 - coth1) *
                   (e4 - 2.0 * std::log(tanh1 * coth2));
  return {f, g, 1.0 - f / g};
}

double carnot_efficiency(const EngineConfig& cfg) {
  return 1.0 - cfg.tau_cold.value() / cfg.tau_hot.value();
}

Region classify_region(const EngineConfig& cfg) {
  const double rc_cold = critical_squeezing(cfg.tau_cold);
  const double rc_hot = critical_squeezing(cfg.tau_hot);
  const double r = cfg.r_work;
  if (std::abs(r - rc_cold) <= kBoundaryTolerance ||
      std::abs(r - rc_hot) <= kBoundaryTolerance) {
    return Region::Boundary;
  }
  if (r < rc_cold) return Region::I;
  if (r < rc_hot) return Region::II;
  return Region::III;
}

}  // namespace sqheat
