#include "sqheat/thermo.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sqheat/errors.hpp"

namespace sqheat {

ThermoPath::ThermoPath(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw DomainError("a path needs at least one piece");
  if (pieces_.front().s_begin != 0.0 || pieces_.back().s_end != 1.0) {
    throw DomainError("path pieces must cover s in [0, 1]");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (!(p.s_end > p.s_begin)) throw DomainError("empty path piece");
    if (i > 0 && pieces_[i - 1].s_end != p.s_begin) {
      throw DomainError("path pieces must be contiguous");
    }
    if (!p.r || !p.n || !p.dr_ds || !p.dn_ds) {
      throw DomainError("path piece is missing a component function");
    }
  }
  for (double s : {0.0, 1.0}) {
    const Point e = at(s);
    if (!std::isfinite(e.r) || !std::isfinite(e.n) || e.r < 0.0 || e.n < 0.0) {
      throw DomainError("path endpoints must be finite with r >= 0, n >= 0");
    }
  }
}

ThermoPath ThermoPath::polyline(std::span<const Point> points) {
  if (points.size() < 2) throw DomainError("a polyline needs two points");
  const std::size_t segments = points.size() - 1;
  std::vector<Piece> pieces;
  pieces.reserve(segments);
  for (std::size_t i = 0; i < segments; ++i) {
    const double s0 = static_cast<double>(i) / static_cast<double>(segments);
    const double s1 =
        i + 1 == segments ? 1.0
                          : static_cast<double>(i + 1) / static_cast<double>(segments);
    const Point a = points[i];
    const Point b = points[i + 1];
    const double dr = (b.r - a.r) / (s1 - s0);
    const double dn = (b.n - a.n) / (s1 - s0);
    // Interpolate from the nearer end so each knot is reproduced exactly.
    auto lerp = [s0, s1](double va, double vb) {
      return [=](double s) {
        const double t = (s - s0) / (s1 - s0);
        return t < 0.5 ? va + (vb - va) * t : vb - (vb - va) * (1.0 - t);
      };
    };
    pieces.push_back({s0, s1, lerp(a.r, b.r), lerp(a.n, b.n),
                      [dr](double) { return dr; }, [dn](double) { return dn; }});
  }
  return ThermoPath(std::move(pieces));
}

ThermoPath ThermoPath::segment(Point from, Point to) {
  const Point pts[] = {from, to};
  return polyline(pts);
}

ThermoPath ThermoPath::smooth(Fn r, Fn n, Fn dr_ds, Fn dn_ds) {
  std::vector<Piece> pieces;
  pieces.push_back(
      {0.0, 1.0, std::move(r), std::move(n), std::move(dr_ds), std::move(dn_ds)});
  return ThermoPath(std::move(pieces));
}

ThermoPath::Point ThermoPath::at(double s) const {
  for (const Piece& p : pieces_) {
    if (s <= p.s_end) return {p.r(s), p.n(s)};
  }
  const Piece& last = pieces_.back();
  return {last.r(s), last.n(s)};
}

double internal_energy(double n_th, double r) {
  return (n_th + 0.5) * std::cosh(2.0 * r);
}

double internal_energy(const SqueezedThermalState& state) {
  return internal_energy(state.n_th(), state.r());
}

double energy_dr(double n_th, double r) {
  return 2.0 * (n_th + 0.5) * std::sinh(2.0 * r);
}

double energy_dn(double r) { return std::cosh(2.0 * r); }

EnergyDelta work_heat_along(const ThermoPath& path, double quad_tol) {
  EnergyDelta out;
  for (const ThermoPath::Piece& p : path.pieces()) {
    auto checked = [&p](double s) {
      const double r = p.r(s);
      const double n = p.n(s);
      if (!(r >= 0.0) || !(n >= 0.0)) {
        throw DomainError("path leaves the physical quadrant at s=" +
                          std::to_string(s));
      }
      return std::pair{r, n};
    };
    auto work = [&](double s) {
      const auto [r, n] = checked(s);
      return energy_dr(n, r) * p.dr_ds(s);
    };
    auto heat = [&](double s) {
      const auto [r, n] = checked(s);
      return energy_dn(r) * p.dn_ds(s);
    };
    out.work_on += integrate(work, p.s_begin, p.s_end, quad_tol).value;
    out.heat_in += integrate(heat, p.s_begin, p.s_end, quad_tol).value;
  }
  out.dE = out.work_on + out.heat_in;
  return out;
}

double coherence_estimate(const SqueezedThermalState& state) {
  if (state.n_th() == 0.0) {
    throw DomainError("coherence estimate needs a finite temperature (n_th > 0)");
  }
  const double tau = temperature_of(state.n_th()).value();
  const double beta_s = std::cosh(2.0 * state.r()) / tau;
  return beta_s * covariance_of(state).m_cm;
}

double free_energy_work(const SqueezedThermalState& a,
                        const SqueezedThermalState& b, double bath_r) {
  if (!(bath_r >= 0.0)) throw DomainError("bath squeezing must be >= 0");
  const double dm = covariance_of(b).m_cm - covariance_of(a).m_cm;
  return std::tanh(2.0 * bath_r) * dm;
}

}  // namespace sqheat
