#pragma once

#include <cstddef>

#include "multiwell/well_spec.hpp"

namespace multiwell {

/// Parameters of the symmetric triple-well family: wells at 0 and +-a with
/// central weight 1-lambda and lateral weights lambda/2 each. The open
/// interval for lambda is enforced with a guard band [1e-6, 1-1e-6] (the E1
/// bound diverges as lambda -> 0, and sweeps legitimately use values as
/// extreme as 0.002).
struct TripleParams {
  TripleParams(double lambda_in, double a_in);
  double lambda;
  double a;
};

/// The triple-well potential in closed form (a ratio of sech / sech^3
/// combinations). Even in x, with range inside [-2, 0).
double v3(const TripleParams& p, double x);

/// Normalization constant of the exact ground state.
double alpha3(const TripleParams& p);

/// Exact normalized ground state; even, node-free.
double psi3(const TripleParams& p, double x);

/// Ground density psi3^2.
double rho3(const TripleParams& p, double x);

/// Lateral-lateral and central-lateral overlaps of the shifted seed states:
/// 2a csch 2a and a csch a. Both in (0,1), -> 1 as a->0+ and -> 0 as a->inf.
double overlap_pm(double a);
double overlap_0p(double a);

/// Interference part of the ground density: rho = iota + alpha^2 [
/// (1-lambda)^2 rho0(x) + (lambda^2/4) rho0(x+a) + (lambda^2/4) rho0(x-a) ].
double iota3(const TripleParams& p, double x);

/// Variational upper bound for the first excited level (odd trial built from
/// the lateral seed states).
double bound_e1(const TripleParams& p);

/// The closed-form gap function
///   f_a(lambda) = 6 lambda^2 a csch 2a / ((1-lambda)^2 + lambda^2/2
///                 + lambda^2 a csch 2a - 2 lambda (1-lambda) a csch a).
double gap_bound_f(const TripleParams& p);

/// Largest lambda up to which f_a is increasing: 1/(1 + a csch a). Beyond it
/// f_a decreases toward lambda -> 1, so the increase is not global.
double f_monotone_limit(double a);

/// Upper bound on the Rayleigh quotient of the two-node trial that keeps the
/// central-lateral overlap term:
///   E0 + (8 lambda (1-lambda) O_0p + 3 lambda^2 O_pm) / D^2,
/// where D^2 is the trial normalization. Unlike gap_bound_f, this one is
/// actually satisfied by the trial energy everywhere.
double phi2_rayleigh_bound(const TripleParams& p);

/// Odd single-node trial [psi0(x+a) - psi0(x-a)] / sqrt(2(1 - O_pm)).
double trial_phi1(const TripleParams& p, double x);

/// Even two-node trial [(1-l) psi0(x) - (l/2) psi0(x+a) - (l/2) psi0(x-a)]
/// normalized by D.
double trial_phi2(const TripleParams& p, double x);

/// Depth quotient Q = v3(0)/v3(a) and peak quotient C = rho(0)/rho(a),
/// evaluated at the nominal well positions x = 0 and x = a.
double q_ratio(const TripleParams& p);
double c_ratio(const TripleParams& p);

/// Everything the bound computations produce for one parameter point.
struct BoundReport {
  double e1_upper;      // bound_e1
  double e2_gap_upper;  // gap_bound_f
  double overlap_pm;
  double overlap_0p;
  double alpha;
};

BoundReport bounds_report(const TripleParams& p);

/// The same potential as a generic WellSpec (weights (1-l, l/2, l/2), shifts
/// (0, a, -a), sech seed); the generic machinery and the closed forms above
/// must agree wherever both apply.
WellSpec to_well_spec(const TripleParams& p);

// Grid evaluators backed by the array kernels; out must hold n values.
void v3_grid(const TripleParams& p, const double* xs, double* out,
             std::size_t n);
void psi3_grid(const TripleParams& p, const double* xs, double* out,
               std::size_t n);
void rho3_grid(const TripleParams& p, const double* xs, double* out,
               std::size_t n);

}  // namespace multiwell
