#pragma once

// Raw-pointer entry points for each instruction-set variant. The vector
// translation units are built with extra -m flags, so this header (and those
// units) stay limited to C headers to keep ISA-specific code out of any
// inline function shared with the rest of the program.

#include <stddef.h>
#include <stdint.h>

namespace sqheat::kernels::detail {

struct RelaxLanesRaw {
  double* n;
  double* m;
  const double* n_target;
  const double* m_target;
  const double* rate;
  double* min_slack;
  size_t count;
};

void classicality_scalar(const double* n_th, const double* r, double* out,
                         size_t count);
void p_representable_scalar(const double* n_cm, const double* m_cm,
                            uint8_t* out, size_t count);
void relax_rk4_scalar(const RelaxLanesRaw& lanes, double h, size_t steps);

#if defined(SQHEAT_HAVE_AVX2)
void classicality_avx2(const double* n_th, const double* r, double* out,
                       size_t count);
void p_representable_avx2(const double* n_cm, const double* m_cm, uint8_t* out,
                          size_t count);
void relax_rk4_avx2(const RelaxLanesRaw& lanes, double h, size_t steps);
#endif

#if defined(SQHEAT_HAVE_NEON)
void classicality_neon(const double* n_th, const double* r, double* out,
                       size_t count);
void p_representable_neon(const double* n_cm, const double* m_cm, uint8_t* out,
                          size_t count);
void relax_rk4_neon(const RelaxLanesRaw& lanes, double h, size_t steps);
#endif

}  // namespace sqheat::kernels::detail
