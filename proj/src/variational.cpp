#include "multiwell/variational.hpp"

#include <cmath>
#include <stdexcept>

#include "multiwell/eigensolver.hpp"
#include "multiwell/potential_core.hpp"

namespace multiwell {

double mean_v(const SolvableSeed& seed, double half_width,
              const QuadratureOptions& opts) {
  return quadrature(
      [&](double x) {
        const double p = seed.ground_state(x);
        return p * seed.potential(x) * p;
      },
      -half_width, half_width, opts.abs_tol);
}

IntegralSet integral_set(const WellSpec& spec, const QuadratureOptions& opts) {
  const std::size_t n = spec.size();
  const double half_width = spec.domain_half_width();

  IntegralSet set;
  set.mean_v = mean_v(spec.seed, half_width, opts);
  set.v_mat = Matrix(n);
  set.u_mat = Matrix(n);

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      set.v_mat(k, j) = quadrature(
          [&](double x) {
            return spec.seed.ground_state(x + spec.shifts[j]) *
                   synth_potential(spec, x) *
                   spec.seed.ground_state(x + spec.shifts[k]);
          },
          -half_width, half_width, opts.abs_tol);
      set.u_mat(k, j) = quadrature(
          [&](double x) {
            const double pk = spec.seed.ground_state(x + spec.shifts[k]);
            return spec.seed.ground_state(x + spec.shifts[j]) *
                   spec.seed.potential(x + spec.shifts[k]) * pk;
          },
          -half_width, half_width, opts.abs_tol);
    }
  }
  return set;
}

namespace {

std::vector<double> gram_normalized(const TrialCombination& trial,
                                    const Matrix& overlaps) {
  const std::size_t n = trial.spec.size();
  if (trial.betas.size() != n)
    throw std::invalid_argument("TrialCombination: beta count must match spec size");
  double norm_sq = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      norm_sq += trial.betas[k] * trial.betas[l] * overlaps(k, l);
  if (!(norm_sq > 0.0))
    throw std::invalid_argument("TrialCombination: betas have zero Gram norm");
  std::vector<double> b(trial.betas);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (double& value : b) value *= inv;
  return b;
}

}  // namespace

double rayleigh(const TrialCombination& trial, const IntegralSet& integrals,
                const Matrix& overlaps) {
  const std::size_t n = trial.spec.size();
  const std::vector<double> b = gram_normalized(trial, overlaps);

  double energy = trial.spec.seed.ground_energy;
  for (std::size_t k = 0; k < n; ++k)
    energy += b[k] * b[k] * (integrals.v_mat(k, k) - integrals.mean_v);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (k != j)
        energy += b[k] * b[j] * (integrals.v_mat(j, k) - integrals.u_mat(k, j));
  return energy;
}

double rayleigh(const TrialCombination& trial, const QuadratureOptions& opts) {
  return rayleigh(trial, integral_set(trial.spec, opts),
                  overlap_matrix(trial.spec, opts));
}

double bound_rhs(const TrialCombination& trial, const QuadratureOptions& opts) {
  const IntegralSet integrals = integral_set(trial.spec, opts);
  const Matrix overlaps = overlap_matrix(trial.spec, opts);
  const std::vector<double> b = gram_normalized(trial, overlaps);
  const std::size_t n = trial.spec.size();
  const double swing = trial.spec.seed.v_upper - trial.spec.seed.v_lower;

  double energy = trial.spec.seed.ground_energy;
  for (std::size_t k = 0; k < n; ++k)
    energy += b[k] * b[k] * (integrals.v_mat(k, k) - integrals.mean_v);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (k != j) energy += swing * b[k] * b[j] * overlaps(k, j);
  return energy;
}

std::vector<double> span_levels(const WellSpec& spec,
                                const QuadratureOptions& opts) {
  const std::size_t n = spec.size();
  const IntegralSet integrals = integral_set(spec, opts);
  const Matrix overlaps = overlap_matrix(spec, opts);

  // <psi_k | H psi_j> = E0 O_kj + v(k,j) - u(j,k); symmetrized against
  // quadrature noise before solving the pencil.
  Matrix h(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      h(k, j) = spec.seed.ground_energy * overlaps(k, j) +
                integrals.v_mat(k, j) - integrals.u_mat(j, k);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = k + 1; j < n; ++j) {
      const double v = 0.5 * (h(k, j) + h(j, k));
      h(k, j) = v;
      h(j, k) = v;
    }
  return generalized_eigenvalues(h, overlaps);
}

DegeneracyTrendReport degeneracy_trend(std::span<const WellSpec> family,
                                       const DegeneracyTrendOptions& opts) {
  DegeneracyTrendReport report;
  for (const WellSpec& spec : family) {
    DegeneracyTrendPoint point;
    point.spread = spec.shifts.spread();

    const Matrix overlaps = overlap_matrix(spec, opts.quadrature);
    point.max_offdiag_overlap = overlaps.max_abs_offdiagonal();

    const IntegralSet integrals = integral_set(spec, opts.quadrature);
    for (std::size_t k = 0; k < spec.size(); ++k)
      point.max_diag_v_deviation =
          std::max(point.max_diag_v_deviation,
                   std::abs(integrals.v_mat(k, k) - integrals.mean_v));

    const auto n_levels = static_cast<int>(spec.size());
    if (n_levels > 1) {
      const GridSpec grid =
          symmetric_grid(spec.shifts.max_abs() + opts.domain_padding,
                         opts.grid_step, Parity::none);
      const Spectrum spectrum = lowest_eigenpairs(
          [&](double x) { return synth_potential(spec, x); }, grid, n_levels);
      for (int j = 1; j < n_levels; ++j)
        point.oracle_gaps.push_back(spectrum.energies[j] -
                                    spectrum.energies[0]);
    }
    report.points.push_back(std::move(point));
  }

  auto non_increasing = [](auto&& get) {
    return [get](const std::vector<DegeneracyTrendPoint>& pts) {
      for (std::size_t i = 1; i < pts.size(); ++i)
        if (get(pts[i]) > get(pts[i - 1])) return false;
      return true;
    };
  };
  report.overlaps_decreasing = non_increasing([](const DegeneracyTrendPoint& p) {
    return p.max_offdiag_overlap;
  })(report.points);
  report.v_deviation_decreasing =
      non_increasing([](const DegeneracyTrendPoint& p) {
        return p.max_diag_v_deviation;
      })(report.points);
  report.gaps_decreasing = [&] {
    for (std::size_t i = 1; i < report.points.size(); ++i) {
      const auto& prev = report.points[i - 1].oracle_gaps;
      const auto& cur = report.points[i].oracle_gaps;
      for (std::size_t g = 0; g < std::min(prev.size(), cur.size()); ++g)
        if (cur[g] > prev[g]) return false;
    }
    return true;
  }();
  return report;
}

}  // namespace multiwell
