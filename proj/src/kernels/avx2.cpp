// Built with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_impl.h"

namespace sqheat::kernels::detail {

namespace {

// Cephes-style exp: x = k ln2 + f with |f| <= ln2/2, then a (2,3) Pade form
// for e^f and an exponent-field scale by 2^k. Accurate to ~1 ulp.
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

// Valid for x <= 0; x below the normal range flushes to zero.
inline __m256d exp_nonpositive(__m256d x) {
  const __m256d underflow = _mm256_cmp_pd(x, _mm256_set1_pd(kExpLow), _CMP_LT_OQ);
  x = _mm256_max_pd(x, _mm256_set1_pd(kExpLow));

  const __m256d k = _mm256_floor_pd(
      _mm256_fmadd_pd(x, _mm256_set1_pd(kLog2e), _mm256_set1_pd(0.5)));
  x = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Hi), x);
  x = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Lo), x);

  const __m256d xx = _mm256_mul_pd(x, x);
  __m256d p = _mm256_fmadd_pd(_mm256_set1_pd(kP0), xx, _mm256_set1_pd(kP1));
  p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(kP2));
  p = _mm256_mul_pd(p, x);
  __m256d q = _mm256_fmadd_pd(_mm256_set1_pd(kQ0), xx, _mm256_set1_pd(kQ1));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(kQ2));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(kQ3));
  const __m256d frac = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  const __m256d mant = _mm256_fmadd_pd(_mm256_set1_pd(2.0), frac, _mm256_set1_pd(1.0));

  const __m128i k32 = _mm256_cvtpd_epi32(k);
  __m256i bits = _mm256_cvtepi32_epi64(k32);
  bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
  bits = _mm256_slli_epi64(bits, 52);
  const __m256d result = _mm256_mul_pd(mant, _mm256_castsi256_pd(bits));
  return _mm256_andnot_pd(underflow, result);
}

inline __m256d slack(__m256d n, __m256d m) {
  const __m256d one = _mm256_set1_pd(1.0);
  return _mm256_sub_pd(_mm256_mul_pd(n, _mm256_add_pd(n, one)), _mm256_mul_pd(m, m));
}

}  // namespace

void classicality_avx2(const double* n_th, const double* r, double* out,
                       size_t count) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d minus_two = _mm256_set1_pd(-2.0);
  size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d a = _mm256_add_pd(_mm256_loadu_pd(n_th + i), half);
    const __m256d e = exp_nonpositive(_mm256_mul_pd(minus_two, _mm256_loadu_pd(r + i)));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_mul_pd(a, e), half));
  }
  if (i < count) classicality_scalar(n_th + i, r + i, out + i, count - i);
}

void p_representable_avx2(const double* n_cm, const double* m_cm, uint8_t* out,
                          size_t count) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d n = _mm256_loadu_pd(n_cm + i);
    const __m256d abs_m = _mm256_andnot_pd(sign, _mm256_loadu_pd(m_cm + i));
    const int bits = _mm256_movemask_pd(_mm256_cmp_pd(n, abs_m, _CMP_GE_OQ));
    out[i + 0] = static_cast<uint8_t>(bits & 1);
    out[i + 1] = static_cast<uint8_t>((bits >> 1) & 1);
    out[i + 2] = static_cast<uint8_t>((bits >> 2) & 1);
    out[i + 3] = static_cast<uint8_t>((bits >> 3) & 1);
  }
  if (i < count) p_representable_scalar(n_cm + i, m_cm + i, out + i, count - i);
}

void relax_rk4_avx2(const RelaxLanesRaw& lanes, double h, size_t steps) {
  const __m256d vh = _mm256_set1_pd(h);
  const __m256d vhalf = _mm256_set1_pd(0.5 * h);
  const __m256d vsixth = _mm256_set1_pd(h / 6.0);
  const __m256d two = _mm256_set1_pd(2.0);
  size_t i = 0;
  for (; i + 4 <= lanes.count; i += 4) {
    __m256d n = _mm256_loadu_pd(lanes.n + i);
    __m256d m = _mm256_loadu_pd(lanes.m + i);
    const __m256d nt = _mm256_loadu_pd(lanes.n_target + i);
    const __m256d mt = _mm256_loadu_pd(lanes.m_target + i);
    const __m256d g = _mm256_loadu_pd(lanes.rate + i);
    __m256d lo = _mm256_min_pd(_mm256_loadu_pd(lanes.min_slack + i), slack(n, m));
    for (size_t k = 0; k < steps; ++k) {
      const __m256d kn1 = _mm256_mul_pd(g, _mm256_sub_pd(nt, n));
      const __m256d km1 = _mm256_mul_pd(g, _mm256_sub_pd(mt, m));
      const __m256d kn2 = _mm256_mul_pd(g, _mm256_sub_pd(nt, _mm256_add_pd(n, _mm256_mul_pd(vhalf, kn1))));
      const __m256d km2 = _mm256_mul_pd(g, _mm256_sub_pd(mt, _mm256_add_pd(m, _mm256_mul_pd(vhalf, km1))));
      const __m256d kn3 = _mm256_mul_pd(g, _mm256_sub_pd(nt, _mm256_add_pd(n, _mm256_mul_pd(vhalf, kn2))));
      const __m256d km3 = _mm256_mul_pd(g, _mm256_sub_pd(mt, _mm256_add_pd(m, _mm256_mul_pd(vhalf, km2))));
      const __m256d kn4 = _mm256_mul_pd(g, _mm256_sub_pd(nt, _mm256_add_pd(n, _mm256_mul_pd(vh, kn3))));
      const __m256d km4 = _mm256_mul_pd(g, _mm256_sub_pd(mt, _mm256_add_pd(m, _mm256_mul_pd(vh, km3))));
      const __m256d sn = _mm256_add_pd(_mm256_add_pd(kn1, _mm256_mul_pd(two, kn2)),
                                       _mm256_add_pd(_mm256_mul_pd(two, kn3), kn4));
      const __m256d sm = _mm256_add_pd(_mm256_add_pd(km1, _mm256_mul_pd(two, km2)),
                                       _mm256_add_pd(_mm256_mul_pd(two, km3), km4));
      n = _mm256_add_pd(n, _mm256_mul_pd(vsixth, sn));
      m = _mm256_add_pd(m, _mm256_mul_pd(vsixth, sm));
      lo = _mm256_min_pd(lo, slack(n, m));
    }
    _mm256_storeu_pd(lanes.n + i, n);
    _mm256_storeu_pd(lanes.m + i, m);
    _mm256_storeu_pd(lanes.min_slack + i, lo);
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
