// AArch64 Advanced SIMD variants, two doubles per register.

#include <arm_neon.h>

#include "kernels_impl.h"

namespace sqheat::kernels::detail {

namespace {

// Same reduction and Pade form as the AVX2 exp.
constexpr double kLog2e = 1.4426950408889634073599;
constexpr double kLn2Hi = 6.93145751953125e-1;
constexpr double kLn2Lo = 1.42860682030941723212e-6;
constexpr double kExpLow = -708.3964185322641;
constexpr double kP0 = 1.26177193074810590878e-4;
constexpr double kP1 = 3.02994407707441961300e-2;
constexpr double kP2 = 9.99999999999999999910e-1;
constexpr double kQ0 = 3.00198505138664455042e-6;
constexpr double kQ1 = 2.52448340349684104192e-3;
constexpr double kQ2 = 2.27265548208155028766e-1;
constexpr double kQ3 = 2.00000000000000000009e0;

inline float64x2_t exp_nonpositive(float64x2_t x) {
  const uint64x2_t underflow = vcltq_f64(x, vdupq_n_f64(kExpLow));
  x = vmaxq_f64(x, vdupq_n_f64(kExpLow));

  const float64x2_t k =
      vrndmq_f64(vfmaq_f64(vdupq_n_f64(0.5), x, vdupq_n_f64(kLog2e)));
  x = vfmsq_f64(x, k, vdupq_n_f64(kLn2Hi));
  x = vfmsq_f64(x, k, vdupq_n_f64(kLn2Lo));

  const float64x2_t xx = vmulq_f64(x, x);
  float64x2_t p = vfmaq_f64(vdupq_n_f64(kP1), vdupq_n_f64(kP0), xx);
  p = vfmaq_f64(vdupq_n_f64(kP2), p, xx);
  p = vmulq_f64(p, x);
  float64x2_t q = vfmaq_f64(vdupq_n_f64(kQ1), vdupq_n_f64(kQ0), xx);
  q = vfmaq_f64(vdupq_n_f64(kQ2), q, xx);
  q = vfmaq_f64(vdupq_n_f64(kQ3), q, xx);
  const float64x2_t frac = vdivq_f64(p, vsubq_f64(q, p));
  const float64x2_t mant = vfmaq_f64(vdupq_n_f64(1.0), vdupq_n_f64(2.0), frac);

  int64x2_t bits = vaddq_s64(vcvtq_s64_f64(k), vdupq_n_s64(1023));
  bits = vshlq_n_s64(bits, 52);
  const float64x2_t result = vmulq_f64(mant, vreinterpretq_f64_s64(bits));
  return vbslq_f64(underflow, vdupq_n_f64(0.0), result);
}

inline float64x2_t slack(float64x2_t n, float64x2_t m) {
  return vsubq_f64(vmulq_f64(n, vaddq_f64(n, vdupq_n_f64(1.0))), vmulq_f64(m, m));
}

}  // namespace

void classicality_neon(const double* n_th, const double* r, double* out,
                       size_t count) {
  const float64x2_t half = vdupq_n_f64(0.5);
  size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const float64x2_t a = vaddq_f64(vld1q_f64(n_th + i), half);
    const float64x2_t e = exp_nonpositive(vmulq_n_f64(vld1q_f64(r + i), -2.0));
    vst1q_f64(out + i, vsubq_f64(vmulq_f64(a, e), half));
  }
  if (i < count) classicality_scalar(n_th + i, r + i, out + i, count - i);
}

void p_representable_neon(const double* n_cm, const double* m_cm, uint8_t* out,
                          size_t count) {
  size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const uint64x2_t ge = vcgeq_f64(vld1q_f64(n_cm + i), vabsq_f64(vld1q_f64(m_cm + i)));
    out[i + 0] = static_cast<uint8_t>(vgetq_lane_u64(ge, 0) & 1u);
    out[i + 1] = static_cast<uint8_t>(vgetq_lane_u64(ge, 1) & 1u);
  }
  if (i < count) p_representable_scalar(n_cm + i, m_cm + i, out + i, count - i);
}

void relax_rk4_neon(const RelaxLanesRaw& lanes, double h, size_t steps) {
  const double half = 0.5 * h;
  const double sixth = h / 6.0;
  size_t i = 0;
  for (; i + 2 <= lanes.count; i += 2) {
    float64x2_t n = vld1q_f64(lanes.n + i);
    float64x2_t m = vld1q_f64(lanes.m + i);
    const float64x2_t nt = vld1q_f64(lanes.n_target + i);
    const float64x2_t mt = vld1q_f64(lanes.m_target + i);
    const float64x2_t g = vld1q_f64(lanes.rate + i);
    float64x2_t lo = vminq_f64(vld1q_f64(lanes.min_slack + i), slack(n, m));
    for (size_t k = 0; k < steps; ++k) {
      const float64x2_t kn1 = vmulq_f64(g, vsubq_f64(nt, n));
      const float64x2_t km1 = vmulq_f64(g, vsubq_f64(mt, m));
      const float64x2_t kn2 = vmulq_f64(g, vsubq_f64(nt, vaddq_f64(n, vmulq_n_f64(kn1, half))));
      const float64x2_t km2 = vmulq_f64(g, vsubq_f64(mt, vaddq_f64(m, vmulq_n_f64(km1, half))));
      const float64x2_t kn3 = vmulq_f64(g, vsubq_f64(nt, vaddq_f64(n, vmulq_n_f64(kn2, half))));
      const float64x2_t km3 = vmulq_f64(g, vsubq_f64(mt, vaddq_f64(m, vmulq_n_f64(km2, half))));
      const float64x2_t kn4 = vmulq_f64(g, vsubq_f64(nt, vaddq_f64(n, vmulq_n_f64(kn3, h))));
      const float64x2_t km4 = vmulq_f64(g, vsubq_f64(mt, vaddq_f64(m, vmulq_n_f64(km3, h))));
      const float64x2_t sn = vaddq_f64(vaddq_f64(kn1, vmulq_n_f64(kn2, 2.0)),
                                       vaddq_f64(vmulq_n_f64(kn3, 2.0), kn4));
      const float64x2_t sm = vaddq_f64(vaddq_f64(km1, vmulq_n_f64(km2, 2.0)),
                                       vaddq_f64(vmulq_n_f64(km3, 2.0), km4));
      n = vaddq_f64(n, vmulq_n_f64(sn, sixth));
      m = vaddq_f64(m, vmulq_n_f64(sm, sixth));
      lo = vminq_f64(lo, slack(n, m));
    }
    vst1q_f64(lanes.n + i, n);
    vst1q_f64(lanes.m + i, m);
    vst1q_f64(lanes.min_slack + i, lo);
  }
  if (i < lanes.count) {
    RelaxLanesRaw tail = lanes;
    tail.n += i;
    tail.m += i;
    tail.n_target += i;
    tail.m_target += i;
    tail.rate += i;
    tail.min_slack += i;
    tail.count -= i;
    relax_rk4_scalar(tail, h, steps);
  }
}

}  // namespace sqheat::kernels::detail
