#include "multiwell/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "multiwell/kernels.hpp"

namespace multiwell {

namespace {

constexpr double k_eps = std::numeric_limits<double>::epsilon();
constexpr double k_safe_min = std::numeric_limits<double>::min();

void validate_grid(const GridSpec& grid) {
  if (!(grid.x_min < grid.x_max))
    throw std::invalid_argument("GridSpec: x_min must be below x_max");
  if (grid.n_points < 3)
    throw std::invalid_argument("GridSpec: need at least 3 points");
  if (grid.parity != Parity::none) {
    if (std::abs(grid.x_min + grid.x_max) >
        1e-12 * std::max(1.0, std::abs(grid.x_max)))
      throw std::invalid_argument("GridSpec: parity solves need x_min = -x_max");
    if (grid.n_points % 2 == 0)
      throw std::invalid_argument(
          "GridSpec: parity solves need an odd point count (x = 0 on grid)");
  }
}

// Solve-basis tridiagonal operator and bookkeeping shared by the stages.
struct Discretization {
  std::vector<double> diag, offdiag, offdiag_sq;
  double h = 0.0;
  double anorm = 0.0;   // max row sum, the natural residual scale
  double pivmin = 0.0;
  double measure = 0.0; // grid-measure weight of one solve-basis point
};

Discretization discretize(std::span<const double> v_full, const GridSpec& grid) {
  Discretization d;
  d.h = grid.step();
  const double inv_h2 = 1.0 / (d.h * d.h);
  const std::size_t n_full = grid.n_points;

  std::size_t m = 0;
  switch (grid.parity) {
    case Parity::none: m = n_full - 2; break;
    case Parity::even: m = (n_full - 1) / 2; break;
    case Parity::odd: m = (n_full - 1) / 2 - 1; break;
  }
  if (m < 1) throw std::invalid_argument("GridSpec: grid too small for parity solve");

  d.diag.resize(m);
  d.offdiag.assign(m > 1 ? m - 1 : 0, -inv_h2);
  const std::size_t center = (n_full - 1) / 2;
  switch (grid.parity) {
    case Parity::none:
      for (std::size_t i = 0; i < m; ++i)
        d.diag[i] = 2.0 * inv_h2 + v_full[i + 1];
      d.measure = d.h;
      break;
    case Parity::even:
      for (std::size_t i = 0; i < m; ++i)
        d.diag[i] = 2.0 * inv_h2 + v_full[center + i];
      if (m > 1) d.offdiag[0] = -std::sqrt(2.0) * inv_h2;
      d.measure = 2.0 * d.h;
      break;
    case Parity::odd:
      for (std::size_t i = 0; i < m; ++i)
        d.diag[i] = 2.0 * inv_h2 + v_full[center + 1 + i];
      d.measure = 2.0 * d.h;
      break;
  }

  d.offdiag_sq.resize(d.offdiag.size());
  double max_e2 = 1.0;
  for (std::size_t i = 0; i < d.offdiag.size(); ++i) {
    d.offdiag_sq[i] = d.offdiag[i] * d.offdiag[i];
    max_e2 = std::max(max_e2, d.offdiag_sq[i]);
  }
  d.pivmin = k_safe_min * max_e2;

  for (std::size_t i = 0; i < m; ++i) {
    double row = std::abs(d.diag[i]);
    if (i > 0) row += std::abs(d.offdiag[i - 1]);
    if (i + 1 < m) row += std::abs(d.offdiag[i]);
    d.anorm = std::max(d.anorm, row);
  }
  return d;
}

// Batched bisection: one Sturm-count sweep refines every still-open target.
std::vector<double> bisect_eigenvalues(const Discretization& d, int k) {
  const std::size_t m = d.diag.size();
  double glo = d.diag[0], ghi = d.diag[0];
  for (std::size_t i = 0; i < m; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(d.offdiag[i - 1]);
    if (i + 1 < m) r += std::abs(d.offdiag[i]);
    glo = std::min(glo, d.diag[i] - r);
    ghi = std::max(ghi, d.diag[i] + r);
  }
  const double pad = k_eps * (std::abs(glo) + std::abs(ghi));
  glo -= pad;
  ghi += pad;

  std::vector<double> lo(k, glo), hi(k, ghi), mids;
  std::vector<int> counts, open;
  for (int round = 0; round < 220; ++round) {
    mids.clear();
    open.clear();
    for (int t = 0; t < k; ++t) {
      const double tol =
          2.0 * k_eps * (std::abs(lo[t]) + std::abs(hi[t])) + 2.0 * k_safe_min;
      if (hi[t] - lo[t] > tol) {
        open.push_back(t);
        mids.push_back(0.5 * (lo[t] + hi[t]));
      }
    }
    if (open.empty()) break;

    counts.assign(mids.size(), 0);
    kernels::sturm_counts(d.diag.data(), d.offdiag_sq.data(), m, d.pivmin,
                          mids.data(), counts.data(), mids.size());

    // a count at x bounds every target: E_t < x iff count(x) >= t+1
    for (std::size_t j = 0; j < mids.size(); ++j) {
      for (int t = 0; t < k; ++t) {
        if (counts[j] >= t + 1)
          hi[t] = std::min(hi[t], mids[j]);
        else
          lo[t] = std::max(lo[t], mids[j]);
      }
    }
  }

  std::vector<double> eigs(k);
  for (int t = 0; t < k; ++t) eigs[t] = 0.5 * (lo[t] + hi[t]);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

// Partial-pivot LU of (T - sigma I) and the corresponding solve, kept as
// flat arrays (classic gttrf/gtts2 scheme with one fill-in superdiagonal).
struct TridiagLu {
  std::vector<double> dl, dd, du, du2;
  std::vector<char> swapped;

  TridiagLu(const Discretization& d, double sigma) {
    const std::size_t n = d.diag.size();
    dl.assign(n > 1 ? n - 1 : 0, 0.0);
    du.assign(n > 1 ? n - 1 : 0, 0.0);
    du2.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped.assign(n > 1 ? n - 1 : 0, 0);
    dd.resize(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = d.diag[i] - sigma;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      dl[i] = d.offdiag[i];
      du[i] = d.offdiag[i];
    }
    const double tiny = d.pivmin;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(dd[i]) >= std::abs(dl[i])) {
        if (std::abs(dd[i]) < tiny) dd[i] = (dd[i] < 0.0) ? -tiny : tiny;
        const double fact = dl[i] / dd[i];
        dl[i] = fact;
        dd[i + 1] -= fact * du[i];
      } else {
        const double fact = dd[i] / dl[i];
        dd[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = dd[i + 1];
        dd[i + 1] = temp - fact * dd[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[i] = 1;
      }
    }
    const std::size_t last = n - 1;
    if (std::abs(dd[last]) < tiny) dd[last] = (dd[last] < 0.0) ? -tiny : tiny;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = dd.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    b[n - 1] /= dd[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / dd[n - 2];
    for (std::size_t ii = n; ii >= 3; --ii) {
      const std::size_t i = ii - 3;
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / dd[i];
    }
  }
};

double euclidean_norm(const std::vector<double>& v) {
  return std::sqrt(kernels::dot(v.data(), v.data(), v.size()));
}

void orthogonalize(std::vector<double>& v,
                   const std::vector<std::vector<double>>& basis) {
  for (const auto& u : basis) {
    const double proj = kernels::dot(v.data(), u.data(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * u[i];
  }
}

}  // namespace

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::none: return "none";
    case Parity::even: return "even";
    case Parity::odd: return "odd";
  }
  return "unknown";
}

GridSpec symmetric_grid(double half_width, double h, Parity parity) {
  auto half_count = static_cast<std::size_t>(std::ceil(half_width / h));
  GridSpec grid;
  grid.x_min = -half_width;
  grid.x_max = half_width;
  grid.n_points = 2 * half_count + 1;
  grid.parity = parity;
  return grid;
}

Spectrum lowest_eigenpairs(std::span<const double> potential_values,
                           const GridSpec& grid, int k,
                           const SolverOptions& opts) {
  validate_grid(grid);
  if (potential_values.size() != grid.n_points)
    throw std::invalid_argument(
        "lowest_eigenpairs: potential sample count must match n_points");

  const Discretization d = discretize(potential_values, grid);
  const std::size_t m = d.diag.size();
  if (k < 1) throw std::invalid_argument("lowest_eigenpairs: k must be >= 1");
  if (static_cast<std::size_t>(k) > m / 10)
    throw std::invalid_argument(
        "lowest_eigenpairs: k exceeds n/10, grid too coarse for that many levels");

  Spectrum spectrum;
  spectrum.grid = grid;
  spectrum.energies = bisect_eigenvalues(d, k);

  // inverse iteration, lowest first, orthogonalized against accepted vectors
  const double conv_tol = 512.0 * k_eps * d.anorm;
  std::vector<std::vector<double>> unit_vectors;
  for (int j = 0; j < k; ++j) {
    double sigma = spectrum.energies[j];
    if (j > 0) {
      // keep shifts of a numerically coincident pair apart by a few ulp
      const double floor_sep = 8.0 * k_eps * std::abs(sigma) + 8.0 * k_safe_min;
      sigma = std::max(sigma, spectrum.energies[j - 1] + floor_sep);
    }
    const TridiagLu lu(d, sigma);

    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) {
      // deterministic start with all signs represented
      const double t = static_cast<double>((i * 2654435761u) & 0xffffu);
      v[i] = 1.0 + 1e-3 * (t / 65535.0 - 0.5);
    }
    double norm = euclidean_norm(v);
    for (double& value : v) value /= norm;

    bool converged = false;
    double res = 0.0;
    int it = 0;
    for (; it < opts.max_inverse_iterations; ++it) {
      lu.solve(v);
      if (j > 0) orthogonalize(v, unit_vectors);
      norm = euclidean_norm(v);
      if (!(norm > 0.0) || !std::isfinite(norm))
        throw SolverError("inverse iteration produced a degenerate vector", it + 1);
      for (double& value : v) value /= norm;
      res = kernels::tridiag_residual_inf(d.diag.data(), d.offdiag.data(),
                                          v.data(), m, spectrum.energies[j]);
      if (res <= conv_tol) {
        converged = true;
        ++it;
        break;
      }
    }
    if (!converged)
      throw SolverError("inverse iteration did not converge", it);

    // sign convention: make the largest-magnitude entry positive
    double extreme = 0.0;
    for (double value : v)
      if (std::abs(value) > std::abs(extreme)) extreme = value;
    if (extreme < 0.0)
      for (double& value : v) value = -value;

    unit_vectors.push_back(v);
    spectrum.residuals.push_back(res);
    spectrum.parity.push_back(grid.parity);
  }

  // grid-measure normalization (full-line L2 norm of 1)
  const double scale = 1.0 / std::sqrt(d.measure);
  spectrum.vectors = std::move(unit_vectors);
  for (auto& v : spectrum.vectors)
    for (double& value : v) value *= scale;

  if (opts.requested_accuracy > 0.0) {
    const double inv_h2 = 1.0 / (d.h * d.h);
    for (int j = 0; j < k; ++j) {
      // second-order eigenvalue error estimate (h^2/12) * int ((V-E) psi)^2
      double sum = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        const double vd = (d.diag[i] - 2.0 * inv_h2 - spectrum.energies[j]) *
                          spectrum.vectors[j][i];
        sum += vd * vd;
      }
      const double est = (d.h * d.h / 12.0) * d.measure * sum;
      if (est > opts.requested_accuracy) {
        spectrum.warnings.push_back(
            "grid too coarse for level " + std::to_string(j) +
            ": estimated discretization error " + std::to_string(est) +
            " exceeds requested accuracy");
      }
    }
  }
  return spectrum;
}

Spectrum lowest_eigenpairs(const std::function<double(double)>& potential,
                           const GridSpec& grid, int k,
                           const SolverOptions& opts) {
  validate_grid(grid);
  std::vector<double> values(grid.n_points);
  const double h = grid.step();
  for (std::size_t i = 0; i < grid.n_points; ++i)
    values[i] = potential(grid.x_min + static_cast<double>(i) * h);
  return lowest_eigenpairs(std::span<const double>(values), grid, k, opts);
}

std::vector<double> Spectrum::solve_abscissae() const {
  const double h = grid.step();
  std::vector<double> xs;
  switch (parity.empty() ? grid.parity : parity.front()) {
    case Parity::none:
      for (std::size_t i = 1; i + 1 < grid.n_points; ++i)
        xs.push_back(grid.x_min + static_cast<double>(i) * h);
      break;
    case Parity::even:
      for (std::size_t i = 0; i < (grid.n_points - 1) / 2; ++i)
        xs.push_back(static_cast<double>(i) * h);
      break;
    case Parity::odd:
      for (std::size_t i = 1; i < (grid.n_points - 1) / 2; ++i)
        xs.push_back(static_cast<double>(i) * h);
      break;
  }
  return xs;
}

std::vector<double> Spectrum::full_abscissae() const {
  const double h = grid.step();
  std::vector<double> xs(grid.n_points);
  for (std::size_t i = 0; i < grid.n_points; ++i)
    xs[i] = grid.x_min + static_cast<double>(i) * h;
  return xs;
}

std::vector<double> Spectrum::vector_on_full_grid(std::size_t j) const {
  const auto& v = vectors.at(j);
  std::vector<double> full(grid.n_points, 0.0);
  const std::size_t center = (grid.n_points - 1) / 2;
  switch (grid.parity) {
    case Parity::none:
      for (std::size_t i = 0; i < v.size(); ++i) full[i + 1] = v[i];
      break;
    case Parity::even:
      // v[0] is the sqrt(2)-scaled x = 0 basis coefficient
      full[center] = std::sqrt(2.0) * v[0];
      for (std::size_t i = 1; i < v.size(); ++i) {
        full[center + i] = v[i];
        full[center - i] = v[i];
      }
      break;
    case Parity::odd:
      for (std::size_t i = 0; i < v.size(); ++i) {
        full[center + 1 + i] = v[i];
        full[center - 1 - i] = -v[i];
      }
      break;
  }
  return full;
}

double residual(const std::function<double(double)>& potential, double energy,
                const std::function<double(double)>& wavefn,
                const GridSpec& grid) {
  validate_grid(grid);
  const double h = grid.step();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < grid.n_points; ++i) {
    const double x = grid.x_min + static_cast<double>(i) * h;
    const double lap =
        (wavefn(x + h) - 2.0 * wavefn(x) + wavefn(x - h)) / (h * h);
    const double r = std::abs(-lap + (potential(x) - energy) * wavefn(x));
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace multiwell
