#include <algorithm>
#include <string>

#include "kernels_impl.h"
#include "sqheat/errors.hpp"
#include "sqheat/kernels.hpp"

namespace sqheat::kernels {

namespace {

Isa detect() noexcept {
#if defined(SQHEAT_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return Isa::Avx2;
  }
#elif defined(SQHEAT_HAVE_NEON)
  return Isa::Neon;
#endif
  return Isa::Scalar;
}

bool supported(Isa isa) noexcept {
  if (isa == Isa::Scalar) return true;
  return isa == active_isa();
}

void require_supported(Isa isa) {
  if (!supported(isa)) {
    throw DomainError(std::string("kernel variant not available: ") +
                      std::string(isa_name(isa)));
  }
}

template <class... Spans>
void require_same_size(std::size_t size, const Spans&... spans) {
  if (((spans.size() != size) || ...)) {
    throw DomainError("kernel arguments must have equal lengths");
  }
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

Isa active_isa() noexcept {
  static const Isa isa = detect();
  return isa;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  if (active_isa() != Isa::Scalar) out.push_back(active_isa());
  return out;
}

void classicality(Isa isa, std::span<const double> n_th,
                  std::span<const double> r, std::span<double> out) {
  require_supported(isa);
  require_same_size(out.size(), n_th, r);
  if (std::any_of(r.begin(), r.end(), [](double v) { return !(v >= 0.0); })) {
    throw DomainError("classicality kernel requires r >= 0");
  }
  switch (isa) {
#if defined(SQHEAT_HAVE_AVX2)
    case Isa::Avx2:
      return detail::classicality_avx2(n_th.data(), r.data(), out.data(), out.size());
#endif
#if defined(SQHEAT_HAVE_NEON)
    case Isa::Neon:
      return detail::classicality_neon(n_th.data(), r.data(), out.data(), out.size());
#endif
    default:
      return detail::classicality_scalar(n_th.data(), r.data(), out.data(), out.size());
  }
}

void classicality(std::span<const double> n_th, std::span<const double> r,
                  std::span<double> out) {
  classicality(active_isa(), n_th, r, out);
}

void p_representable(Isa isa, std::span<const double> n_cm,
                     std::span<const double> m_cm, std::span<std::uint8_t> out) {
  require_supported(isa);
  require_same_size(out.size(), n_cm, m_cm);
  switch (isa) {
#if defined(SQHEAT_HAVE_AVX2)
    case Isa::Avx2:
      return detail::p_representable_avx2(n_cm.data(), m_cm.data(), out.data(), out.size());
#endif
#if defined(SQHEAT_HAVE_NEON)
    case Isa::Neon:
      return detail::p_representable_neon(n_cm.data(), m_cm.data(), out.data(), out.size());
#endif
    default:
      return detail::p_representable_scalar(n_cm.data(), m_cm.data(), out.data(), out.size());
  }
}

void p_representable(std::span<const double> n_cm, std::span<const double> m_cm,
                     std::span<std::uint8_t> out) {
  p_representable(active_isa(), n_cm, m_cm, out);
}

void relax_rk4(Isa isa, const RelaxLanes& lanes, double h, std::size_t steps) {
  require_supported(isa);
  require_same_size(lanes.n.size(), lanes.m, lanes.n_target, lanes.m_target,
                    lanes.rate, lanes.min_slack);
  const detail::RelaxLanesRaw raw{lanes.n.data(),        lanes.m.data(),
                                  lanes.n_target.data(), lanes.m_target.data(),
                                  lanes.rate.data(),     lanes.min_slack.data(),
                                  lanes.n.size()};
  switch (isa) {
#if defined(SQHEAT_HAVE_AVX2)
    case Isa::Avx2:
      return detail::relax_rk4_avx2(raw, h, steps);
#endif
#if defined(SQHEAT_HAVE_NEON)
    case Isa::Neon:
      return detail::relax_rk4_neon(raw, h, steps);
#endif
    default:
      return detail::relax_rk4_scalar(raw, h, steps);
  }
}

void relax_rk4(const RelaxLanes& lanes, double h, std::size_t steps) {
  relax_rk4(active_isa(), lanes, h, steps);
}

}  // namespace sqheat::kernels
