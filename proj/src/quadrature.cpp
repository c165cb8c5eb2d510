#include "sqheat/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <sstream>

#include "sqheat/errors.hpp"

namespace sqheat {

namespace {
constexpr unsigned kMaxDepth = 20;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-3)) {
    throw DomainError("quadrature tolerance must lie in (0, 1e-3]");
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("quadrature bounds must be finite");
  }
  QuadratureResult out;
  if (a == b) return out;

  out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, kMaxDepth, rel_tol, &out.error_estimate, &out.l1_norm);

  if (!std::isfinite(out.value)) {
    throw DomainError("integrand is not finite on the integration interval");
  }
  // A vanishing integrand has l1 = 0 and error 0; anything else is judged
  // relative to the L1 norm, with a floor at a few ulps of it.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * out.l1_norm;
  if (out.error_estimate > std::max(rel_tol * out.l1_norm, floor)) {
    std::ostringstream msg;
    msg << "quadrature did not converge on [" << a << ", " << b
        << "]: achieved relative tolerance "
        << out.error_estimate / out.l1_norm << ", requested " << rel_tol;
    throw NumericError(msg.str());
  }
  return out;
}

}  // namespace sqheat
