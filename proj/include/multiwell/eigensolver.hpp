#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace multiwell {

enum class Parity { none, even, odd };

const char* parity_name(Parity p);

/// Uniform grid x_i = x_min + i h, i = 0..n_points-1, h = (x_max-x_min) /
/// (n_points-1), with Dirichlet conditions at both ends. Parity solves
/// restrict to half the symmetric domain: they require x_min = -x_max and an
/// odd n_points so that x = 0 is a grid point. Even parity replaces the
/// boundary condition at 0 by the mirror condition psi(-h) = psi(h) (the
/// matrix is symmetrized by scaling the x = 0 basis vector by sqrt(2)); odd
/// parity imposes psi(0) = 0.
struct GridSpec {
  double x_min = -30.0;
  double x_max = 30.0;
  std::size_t n_points = 12001;
  Parity parity = Parity::none;

  double step() const {
    return (x_max - x_min) / static_cast<double>(n_points - 1);
  }
};

/// Convenience: symmetric grid over [-half_width, half_width] with step
/// approximately h (n_points rounded to keep the grid symmetric and odd).
GridSpec symmetric_grid(double half_width, double h,
                        Parity parity = Parity::none);

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, int iterations_in)
      : std::runtime_error(what), iterations(iterations_in) {}
  int iterations;
};

struct SolverOptions {
  int max_inverse_iterations = 16;
  /// When positive, the solver estimates the O(h^2) discretization error of
  /// each eigenvalue and records a warning if the estimate exceeds this.
  double requested_accuracy = 0.0;
};

/// Lowest-k eigenpairs of -d^2/dx^2 + V on the grid. Vectors live on the
/// solve basis (interior points for full solves, the half grid for parity
/// solves) and are normalized so that the full-line grid-measure L2 norm is
/// 1. residuals[j] = ||T v - E v||_inf of the Euclidean-normalized vector.
struct Spectrum {
  std::vector<double> energies;
  std::vector<std::vector<double>> vectors;
  std::vector<double> residuals;
  std::vector<Parity> parity;
  GridSpec grid;
  std::vector<std::string> warnings;

  /// Abscissae of the solve basis (matches vectors[j]).
  std::vector<double> solve_abscissae() const;
  /// Full symmetric grid abscissae and the j-th eigenvector extended onto
  /// them (parity solves mirror the half grid; full solves pad the Dirichlet
  /// endpoints with zeros).
  std::vector<double> full_abscissae() const;
  std::vector<double> vector_on_full_grid(std::size_t j) const;
};

/// Sturm-sequence bisection for the eigenvalues (batched across the k
/// targets) followed by inverse iteration with partial-pivot LU solves;
/// near-degenerate vectors are re-orthogonalized against the ones already
/// found. Eigenvalues resolve to machine precision, which keeps inverse
/// iteration pointed at the right member of a close pair.
Spectrum lowest_eigenpairs(const std::function<double(double)>& potential,
                           const GridSpec& grid, int k,
                           const SolverOptions& opts = {});

/// Same, with the potential pre-sampled on all n_points grid abscissae.
Spectrum lowest_eigenpairs(std::span<const double> potential_values,
                           const GridSpec& grid, int k,
                           const SolverOptions& opts = {});

/// Max over interior grid points of the second-order stencil residual
/// | -(psi(x+h) - 2 psi(x) + psi(x-h))/h^2 + (V(x) - E) psi(x) |.
double residual(const std::function<double(double)>& potential, double energy,
                const std::function<double(double)>& wavefn,
                const GridSpec& grid);

}  // namespace multiwell
