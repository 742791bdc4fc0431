#pragma once

#include <functional>
#include <string>

namespace multiwell {

/// An exactly solvable single-well building block: a bounded potential
/// together with its node-free normalized ground state and ground energy.
/// Everything downstream (the synthesized multi-well potentials and their
/// exact ground states) is generated from one of these.
struct SolvableSeed {
  std::function<double(double)> potential;     // adimensional energy
  std::function<double(double)> ground_state;  // positive, L2-normalized
  double ground_energy = 0.0;
  double v_lower = 0.0;  // greatest lower bound of the potential
  double v_upper = 0.0;  // least upper bound of the potential
  /// Optional closed form for the overlap of two copies of the ground state
  /// at separation d >= 0. When absent, callers fall back to quadrature.
  std::function<double(double)> overlap_closed_form;
  std::string name;
};

/// The canonical seed: V(x) = -2 sech^2 x with ground state sech(x)/sqrt(2)
/// at energy -1, bounds [-2, 0], and overlap(d) = d csch d.
const SolvableSeed& sech_seed();

struct SeedCheckOptions {
  double half_width = 30.0;   // reference grid [-X, X]
  double grid_step = 1e-3;
  double norm_tol = 1e-8;
  double residual_tol = 1e-5;
};

/// Numerical audit of the seed invariants: positivity of the ground state,
/// unit normalization, potential bounds, and the finite-difference residual
/// of the claimed eigenpair.
struct SeedCheckReport {
  double norm_deviation = 0.0;   // | int psi0^2 - 1 |
  double max_residual = 0.0;     // FD eigen-residual, max norm
  double min_ground_state = 0.0;
  double bounds_violation = 0.0;
  bool ok(const SeedCheckOptions& opts = {}) const {
    return norm_deviation < opts.norm_tol && max_residual < opts.residual_tol &&
           min_ground_state > 0.0 && bounds_violation == 0.0;
  }
};

SeedCheckReport check_seed(const SolvableSeed& seed,
                           const SeedCheckOptions& opts = {});

}  // namespace multiwell
