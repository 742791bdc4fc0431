#pragma once

#include <span>
#include <vector>

#include "multiwell/matrix.hpp"
#include "multiwell/quadrature.hpp"
#include "multiwell/well_spec.hpp"

namespace multiwell {

/// The integrals behind the trial-energy algebra. Index convention, matching
/// the closed-form expansion of the trial energy:
///   v_mat(k,n) = int psi0(x+a_n) V_synth(x) psi0(x+a_k) dx   (symmetric)
///   u_mat(k,n) = int psi0(x+a_n) V_seed(x+a_k) psi0(x+a_k) dx
/// Every entry is computed independently from its own quadrature; u_mat is
/// stored exactly as defined, both orientations included (for seed
/// eigenstates the two orientations agree analytically, so their difference
/// doubles as a quadrature diagnostic).
struct IntegralSet {
  double mean_v = 0.0;  // int psi0 V psi0
  Matrix v_mat;
  Matrix u_mat;
};

double mean_v(const SolvableSeed& seed, double half_width = 30.0,
              const QuadratureOptions& opts = {});

IntegralSet integral_set(const WellSpec& spec, const QuadratureOptions& opts = {});

/// A linear combination sum_k beta_k psi0(x + a_k) of the shifted seed
/// ground states. Betas need not be normalized; the Gram normalization
/// (beta' O beta = 1) is applied internally where required.
struct TrialCombination {
  WellSpec spec;
  std::vector<double> betas;
};

/// Energy expectation of the (normalized) trial in the synthesized
/// potential:
///   E0 + sum_n b_n^2 (v_nn - <V>) + sum_{k!=n} b_k b_n (v(n,k) - u(k,n)).
double rayleigh(const TrialCombination& trial, const QuadratureOptions& opts = {});
double rayleigh(const TrialCombination& trial, const IntegralSet& integrals,
                const Matrix& overlaps);

/// The bounded-potential estimate that replaces the cross terms by
/// (V_U - V_L) O_kn:
///   E0 + sum_n b_n^2 (v_nn - <V>) + (V_U - V_L) sum_{k!=n} b_k b_n O_kn.
/// An upper bound for rayleigh() when all cross products b_k b_n are
/// nonnegative; otherwise the two values carry no guaranteed order.
double bound_rhs(const TrialCombination& trial, const QuadratureOptions& opts = {});

/// Generalized eigenvalues of the Hamiltonian restricted to the span of the
/// shifted seed states, ascending. The exact ground state lies in the span,
/// so levels[0] recovers E0; levels[1..] are the optimal variational upper
/// bounds the span can produce for the excited levels (the minimizer over
/// trial coefficients Gram-orthogonal to the ground combination).
std::vector<double> span_levels(const WellSpec& spec,
                                const QuadratureOptions& opts = {});

struct DegeneracyTrendPoint {
  double spread = 0.0;                // |A|
  double max_offdiag_overlap = 0.0;   // max_{k!=l} O_kl
  double max_diag_v_deviation = 0.0;  // max_n |v_nn - <V>|
  std::vector<double> oracle_gaps;    // E_n - E_0, n = 1..N-1
};

struct DegeneracyTrendReport {
  std::vector<DegeneracyTrendPoint> points;
  // non-increasing across the family (strict decrease is asserted by tests
  // where the family actually separates)
  bool overlaps_decreasing = false;
  bool v_deviation_decreasing = false;
  bool gaps_decreasing = false;
};

struct DegeneracyTrendOptions {
  double grid_step = 0.005;
  double domain_padding = 25.0;
  QuadratureOptions quadrature;
};

/// Degeneracy onset diagnostics for a family of specs sharing seed and
/// weights with growing shift spread: overlaps, diagonal potential
/// deviations, and FD-oracle level gaps, each expected to shrink as the
/// wells separate.
DegeneracyTrendReport degeneracy_trend(std::span<const WellSpec> family,
                                       const DegeneracyTrendOptions& opts = {});

}  // namespace multiwell
