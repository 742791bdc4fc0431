#include "multiwell/triple_well.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "multiwell/hyperbolic.hpp"
#include "multiwell/kernels.hpp"
#include "multiwell/potential_core.hpp"

namespace multiwell {

namespace {

constexpr double k_lambda_guard = 1e-6;
const double k_inv_sqrt2 = 1.0 / std::sqrt(2.0);

// D^2 = (1-l)^2 + l^2/2 + (l^2/2) O_pm - 2 l (1-l) O_0p, the squared Gram
// norm of the two-node trial's coefficients. Positive for all a > 0.
double phi2_norm_sq(double lambda, double a) {
  const double opm = overlap_pm(a);
  const double o0p = overlap_0p(a);
  const double c = 1.0 - lambda;
  return c * c + 0.5 * lambda * lambda * (1.0 + opm) -
         2.0 * lambda * c * o0p;
}

}  // namespace

TripleParams::TripleParams(double lambda_in, double a_in)
    : lambda(lambda_in), a(a_in) {
  if (!(lambda >= k_lambda_guard && lambda <= 1.0 - k_lambda_guard))
    throw std::invalid_argument(
        "TripleParams: lambda must lie in [1e-6, 1 - 1e-6]");
  if (!(a > 0.0))
    throw std::invalid_argument("TripleParams: a must be positive");
}

double v3(const TripleParams& p, double x) {
  const double s0 = hyperbolic::sech(x);
  const double sp = hyperbolic::sech(x + p.a);
  const double sm = hyperbolic::sech(x - p.a);
  const double c = 1.0 - p.lambda;
  const double h = 0.5 * p.lambda;
  const double num = c * s0 * s0 * s0 + h * sp * sp * sp + h * sm * sm * sm;
  const double den = c * s0 + h * sp + h * sm;
  return -2.0 * num / den;
}

double overlap_pm(double a) { return hyperbolic::d_csch_d(2.0 * a); }

double overlap_0p(double a) { return hyperbolic::d_csch_d(a); }

double alpha3(const TripleParams& p) {
  const double c = 1.0 - p.lambda;
  const double norm_sq = c * c + 2.0 * c * p.lambda * overlap_0p(p.a) +
                         0.5 * p.lambda * p.lambda * (1.0 + overlap_pm(p.a));
  return 1.0 / std::sqrt(norm_sq);
}

double psi3(const TripleParams& p, double x) {
  const double c = 1.0 - p.lambda;
  const double h = 0.5 * p.lambda;
  const double combo = c * hyperbolic::sech(x) + h * hyperbolic::sech(x + p.a) +
                       h * hyperbolic::sech(x - p.a);
  return alpha3(p) * k_inv_sqrt2 * combo;
}

double rho3(const TripleParams& p, double x) {
  const double psi = psi3(p, x);
  return psi * psi;
}

double iota3(const TripleParams& p, double x) {
  const double a2 = alpha3(p);
  const double s0 = hyperbolic::sech(x);
  const double sp = hyperbolic::sech(x + p.a);
  const double sm = hyperbolic::sech(x - p.a);
  const double c = 1.0 - p.lambda;
  return a2 * a2 *
         (0.5 * c * p.lambda * s0 * (sp + sm) +
          0.25 * p.lambda * p.lambda * sp * sm);
}

double bound_e1(const TripleParams& p) {
  const double opm = overlap_pm(p.a);
  const double o0p = overlap_0p(p.a);
  return -1.0 +
         4.0 * (((1.0 - p.lambda) / p.lambda) * o0p + opm) / (1.0 - opm);
}

double gap_bound_f(const TripleParams& p) {
  return 3.0 * p.lambda * p.lambda * overlap_pm(p.a) /
         phi2_norm_sq(p.lambda, p.a);
}

double f_monotone_limit(double a) { return 1.0 / (1.0 + overlap_0p(a)); }

double phi2_rayleigh_bound(const TripleParams& p) {
  const double num = 8.0 * p.lambda * (1.0 - p.lambda) * overlap_0p(p.a) +
                     3.0 * p.lambda * p.lambda * overlap_pm(p.a);
  return -1.0 + num / phi2_norm_sq(p.lambda, p.a);
}

double trial_phi1(const TripleParams& p, double x) {
  const double norm = std::sqrt(2.0 * (1.0 - overlap_pm(p.a)));
  return k_inv_sqrt2 *
         (hyperbolic::sech(x + p.a) - hyperbolic::sech(x - p.a)) / norm;
}

double trial_phi2(const TripleParams& p, double x) {
  const double c = 1.0 - p.lambda;
  const double h = 0.5 * p.lambda;
  const double combo = c * hyperbolic::sech(x) - h * hyperbolic::sech(x + p.a) -
                       h * hyperbolic::sech(x - p.a);
  return k_inv_sqrt2 * combo / std::sqrt(phi2_norm_sq(p.lambda, p.a));
}

double q_ratio(const TripleParams& p) { return v3(p, 0.0) / v3(p, p.a); }

double c_ratio(const TripleParams& p) {
  // alpha cancels in the ratio; work with the bare sech combination.
  const double c = 1.0 - p.lambda;
  const double h = 0.5 * p.lambda;
  const double at0 = c + 2.0 * h * hyperbolic::sech(p.a);
  const double at_a = c * hyperbolic::sech(p.a) + h +
                      h * hyperbolic::sech(2.0 * p.a);
  const double ratio = at0 / at_a;
  return ratio * ratio;
}

BoundReport bounds_report(const TripleParams& p) {
  return BoundReport{bound_e1(p), gap_bound_f(p), overlap_pm(p.a),
                     overlap_0p(p.a), alpha3(p)};
}

WellSpec to_well_spec(const TripleParams& p) {
  return WellSpec(sech_seed(),
                  WeightTuple({1.0 - p.lambda, 0.5 * p.lambda, 0.5 * p.lambda}),
                  ShiftTuple({0.0, p.a, -p.a}));
}

namespace {

struct SechGrids {
  std::vector<double> s0, sp, sm;
  SechGrids(const TripleParams& p, const double* xs, std::size_t n)
      : s0(n), sp(n), sm(n) {
    kernels::sech_array(xs, s0.data(), n);
    kernels::sech_array_shifted(xs, p.a, sp.data(), n);
    kernels::sech_array_shifted(xs, -p.a, sm.data(), n);
  }
};

}  // namespace

void v3_grid(const TripleParams& p, const double* xs, double* out,
             std::size_t n) {
  const SechGrids g(p, xs, n);
  const double c = 1.0 - p.lambda;
  const double h = 0.5 * p.lambda;
  for (std::size_t i = 0; i < n; ++i) {
    const double s0 = g.s0[i], sp = g.sp[i], sm = g.sm[i];
    const double num = c * s0 * s0 * s0 + h * sp * sp * sp + h * sm * sm * sm;
    const double den = c * s0 + h * sp + h * sm;
    out[i] = -2.0 * num / den;
  }
}

void psi3_grid(const TripleParams& p, const double* xs, double* out,
               std::size_t n) {
  const SechGrids g(p, xs, n);
  const double scale = alpha3(p) * k_inv_sqrt2;
  const double c = 1.0 - p.lambda;
  const double h = 0.5 * p.lambda;
  for (std::size_t i = 0; i < n; ++i)
    out[i] = scale * (c * g.s0[i] + h * g.sp[i] + h * g.sm[i]);
}

void rho3_grid(const TripleParams& p, const double* xs, double* out,
               std::size_t n) {
  psi3_grid(p, xs, out, n);
  for (std::size_t i = 0; i < n; ++i) out[i] *= out[i];
}

}  // namespace multiwell
