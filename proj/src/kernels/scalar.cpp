#include <cmath>

#include "kernels_impl.h"

namespace sqheat::kernels::detail {

void classicality_scalar(const double* n_th, const double* r, double* out,
                         size_t count) {
  for (size_t i = 0; i < count; ++i) {
    out[i] = (n_th[i] + 0.5) * std::exp(-2.0 * r[i]) - 0.5;
  }
}

void p_representable_scalar(const double* n_cm, const double* m_cm,
                            uint8_t* out, size_t count) {
  for (size_t i = 0; i < count; ++i) {
    out[i] = n_cm[i] >= std::abs(m_cm[i]) ? 1 : 0;
  }
}

namespace {

inline double slack(double n, double m) { return n * (n + 1.0) - m * m; }

}  // namespace

void relax_rk4_scalar(const RelaxLanesRaw& lanes, double h, size_t steps) {
  const double half = 0.5 * h;
  const double sixth = h / 6.0;
  for (size_t i = 0; i < lanes.count; ++i) {
    double n = lanes.n[i];
    double m = lanes.m[i];
    const double nt = lanes.n_target[i];
    const double mt = lanes.m_target[i];
    const double g = lanes.rate[i];
    double lo = std::fmin(lanes.min_slack[i], slack(n, m));
    for (size_t k = 0; k < steps; ++k) {
      const double kn1 = g * (nt - n);
      const double km1 = g * (mt - m);
      const double kn2 = g * (nt - (n + half * kn1));
      const double km2 = g * (mt - (m + half * km1));
      const double kn3 = g * (nt - (n + half * kn2));
      const double km3 = g * (mt - (m + half * km2));
      const double kn4 = g * (nt - (n + h * kn3));
      const double km4 = g * (mt - (m + h * km3));
      n += sixth * (kn1 + 2.0 * kn2 + 2.0 * kn3 + kn4);
      m += sixth * (km1 + 2.0 * km2 + 2.0 * km3 + km4);
      lo = std::fmin(lo, slack(n, m));
    }
    lanes.n[i] = n;
    lanes.m[i] = m;
    lanes.min_slack[i] = lo;
  }
}

}  // namespace sqheat::kernels::detail
