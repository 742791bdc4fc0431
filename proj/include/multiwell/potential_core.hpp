#pragma once

#include <functional>
#include <vector>

#include "multiwell/matrix.hpp"
#include "multiwell/quadrature.hpp"
#include "multiwell/well_spec.hpp"

namespace multiwell {

/// Xi(x) = sum_n lambda_n psi0(x + a_n). Node-free and strictly positive,
/// being a positive combination of a positive function.
double xi(const WellSpec& spec, double x);

/// The synthesized potential: the psi0-weighted average of the shifted seed
/// potentials,
///   V(x) = sum_n lambda_n V_seed(x+a_n) psi0(x+a_n) / Xi(x).
/// Lies between min_n V_seed(x+a_n) and max_n V_seed(x+a_n) pointwise, and
/// shares the seed's ground level exactly.
double synth_potential(const WellSpec& spec, double x);

/// Overlap matrix O_kl = integral psi0(x+a_k) psi0(x+a_l) dx. Uses the
/// seed's closed form when available, adaptive quadrature otherwise.
Matrix overlap_matrix(const WellSpec& spec, const QuadratureOptions& opts = {});

/// Normalization constant alpha = (sum_n lambda_n^2
///   + sum_{k!=l} lambda_k lambda_l O_kl)^(-1/2).
double ground_alpha(const WellSpec& spec, const QuadratureOptions& opts = {});

/// Exact ground state alpha * Xi(x) of the synthesized potential, with alpha
/// computed once. Callable as wavefunction or density.
class GroundState {
 public:
  GroundState(WellSpec spec, double alpha);
  double operator()(double x) const;
  double density(double x) const;
  double alpha() const { return alpha_; }
  const WellSpec& spec() const { return spec_; }

 private:
  WellSpec spec_;
  double alpha_;
};

GroundState ground_state(const WellSpec& spec, const QuadratureOptions& opts = {});

/// One-shot evaluation of the normalized exact ground state at x.
double ground_wavefunction(const WellSpec& spec, double x,
                           const QuadratureOptions& opts = {});

/// The ground density split into an overlap (interference) term plus
/// weighted shifted copies of the seed density:
///   rho(x) = overlap_term(x) + sum_n W_n rho_seed(x + a_n),
/// with W_n = alpha^2 lambda_n^2.
struct DensityDecomposition {
  std::function<double(double)> overlap_term;
  std::vector<double> weights;
  std::vector<std::function<double(double)>> components;
  double alpha = 0.0;
};

DensityDecomposition density_decomposition(const WellSpec& spec,
                                           const QuadratureOptions& opts = {});

/// The incoherent (classical) limit of the ground density:
///   sum_n (lambda_n^2 / sum_k lambda_k^2) rho_seed(x + a_n).
/// Normalized by construction; the exact density approaches it as the wells
/// separate.
double classical_density(const WellSpec& spec, double x);

}  // namespace multiwell
