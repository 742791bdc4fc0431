#pragma once

#include <cmath>

namespace multiwell::hyperbolic {

/// Overflow-free sech. The naive 1/cosh(x) overflows cosh first; this form
/// decays gracefully to 0 for |x| beyond ~745.
inline double sech(double x) {
  const double t = std::exp(-std::abs(x));
  return 2.0 * t / (1.0 + t * t);
}

/// csch with the guards the well formulas need: arguments above 350 in
/// magnitude return 0 (1/sinh would overflow sinh long before the value
/// matters), tiny arguments use the Laurent series 1/x - x/6 + 7x^3/360.
inline double csch(double x) {
  const double ax = std::abs(x);
  if (ax > 350.0) return 0.0;
  if (ax < 1e-4) {
    const double inv = 1.0 / x;
    return inv - x / 6.0 + 7.0 * x * x * x / 360.0;
  }
  return 1.0 / std::sinh(x);
}

/// d * csch(d) for d >= 0, continuous through the removable singularity at 0:
/// series 1 - d^2/6 + 7 d^4/360 below 1e-4, and 0 past the underflow guard.
inline double d_csch_d(double d) {
  const double ad = std::abs(d);
  if (ad > 350.0) return 0.0;
  if (ad < 1e-4) {
    const double d2 = d * d;
    return 1.0 - d2 / 6.0 + 7.0 * d2 * d2 / 360.0;
  }
  return d / std::sinh(d);
}

}  // namespace multiwell::hyperbolic
