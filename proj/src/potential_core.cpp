#include "multiwell/potential_core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "multiwell/hyperbolic.hpp"

namespace multiwell {

namespace {

const char* k_sech_seed_name = "sech";

double sech_overlap(double d) { return hyperbolic::d_csch_d(std::abs(d)); }

}  // namespace

const SolvableSeed& sech_seed() {
  static const SolvableSeed seed{
      [](double x) {
        const double s = hyperbolic::sech(x);
        return -2.0 * s * s;
      },
      [](double x) { return hyperbolic::sech(x) / std::sqrt(2.0); },
      -1.0,
      -2.0,
      0.0,
      sech_overlap,
      k_sech_seed_name,
  };
  return seed;
}

SeedCheckReport check_seed(const SolvableSeed& seed,
                           const SeedCheckOptions& opts) {
  SeedCheckReport report;
  report.norm_deviation = std::abs(
      quadrature([&](double x) { const double p = seed.ground_state(x);
                                 return p * p; },
                 -opts.half_width, opts.half_width, 1e-13) -
      1.0);

  const double h = opts.grid_step;
  const auto n = static_cast<long>(std::floor(2.0 * opts.half_width / h)) - 1;
  double max_res = 0.0, min_psi = std::numeric_limits<double>::max(),
         bound_violation = 0.0;
  for (long i = 1; i + 1 < n; ++i) {
    const double x = -opts.half_width + i * h;
    const double pm = seed.ground_state(x - h);
    const double p0 = seed.ground_state(x);
    const double pp = seed.ground_state(x + h);
    const double res = std::abs(-(pp - 2.0 * p0 + pm) / (h * h) +
                                (seed.potential(x) - seed.ground_energy) * p0);
    max_res = std::max(max_res, res);
    min_psi = std::min(min_psi, p0);
    const double v = seed.potential(x);
    if (v < seed.v_lower) bound_violation = std::max(bound_violation, seed.v_lower - v);
    if (v > seed.v_upper) bound_violation = std::max(bound_violation, v - seed.v_upper);
  }
  report.max_residual = max_res;
  report.min_ground_state = min_psi;
  report.bounds_violation = bound_violation;
  return report;
}

WeightTuple::WeightTuple(std::vector<double> lambdas)
    : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty())
    throw std::invalid_argument("WeightTuple: at least one weight required");
  double sum = 0.0;
  for (double l : lambdas_) {
    if (!(l > 0.0))
      throw std::invalid_argument("WeightTuple: weights must be positive");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("WeightTuple: weights must sum to 1");
}

double WeightTuple::sum_squares() const {
  double s = 0.0;
  for (double l : lambdas_) s += l * l;
  return s;
}

ShiftTuple::ShiftTuple(std::vector<double> shifts) : shifts_(std::move(shifts)) {
  if (shifts_.empty())
    throw std::invalid_argument("ShiftTuple: at least one shift required");
  for (double a : shifts_)
    if (!std::isfinite(a))
      throw std::invalid_argument("ShiftTuple: shifts must be finite");
}

double ShiftTuple::spread() const {
  double lo = shifts_[0], hi = shifts_[0];
  for (double a : shifts_) {
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  return hi - lo;
}

double ShiftTuple::max_abs() const {
  double m = 0.0;
  for (double a : shifts_) m = std::max(m, std::abs(a));
  return m;
}

WellSpec::WellSpec(SolvableSeed seed_in, WeightTuple weights_in,
                   ShiftTuple shifts_in)
    : seed(std::move(seed_in)), weights(std::move(weights_in)),
      shifts(std::move(shifts_in)) {
  if (weights.size() != shifts.size())
    throw std::invalid_argument("WellSpec: weights and shifts must have equal length");
}

double xi(const WellSpec& spec, double x) {
  double sum = 0.0;
  for (std::size_t n = 0; n < spec.size(); ++n)
    sum += spec.weights[n] * spec.seed.ground_state(x + spec.shifts[n]);
  return sum;
}

double synth_potential(const WellSpec& spec, double x) {
  double num = 0.0, den = 0.0;
  for (std::size_t n = 0; n < spec.size(); ++n) {
    const double p = spec.seed.ground_state(x + spec.shifts[n]);
    num += spec.weights[n] * spec.seed.potential(x + spec.shifts[n]) * p;
    den += spec.weights[n] * p;
  }
  return num / den;
}

Matrix overlap_matrix(const WellSpec& spec, const QuadratureOptions& opts) {
  const std::size_t n = spec.size();
  Matrix o(n);
  const double half_width = spec.domain_half_width();
  for (std::size_t k = 0; k < n; ++k) {
    o(k, k) = 1.0;
    for (std::size_t l = k + 1; l < n; ++l) {
      const double d = std::abs(spec.shifts[k] - spec.shifts[l]);
      double value;
      if (spec.seed.overlap_closed_form) {
        value = spec.seed.overlap_closed_form(d);
      } else {
        value = quadrature(
            [&](double x) {
              return spec.seed.ground_state(x + spec.shifts[k]) *
                     spec.seed.ground_state(x + spec.shifts[l]);
            },
            -half_width, half_width, opts.abs_tol);
      }
      o(k, l) = value;
      o(l, k) = value;
    }
  }
  return o;
}

double ground_alpha(const WellSpec& spec, const QuadratureOptions& opts) {
  const Matrix o = overlap_matrix(spec, opts);
  double norm_sq = 0.0;
  for (std::size_t k = 0; k < spec.size(); ++k)
    for (std::size_t l = 0; l < spec.size(); ++l)
      norm_sq += spec.weights[k] * spec.weights[l] * o(k, l);
  return 1.0 / std::sqrt(norm_sq);
}

GroundState::GroundState(WellSpec spec, double alpha)
    : spec_(std::move(spec)), alpha_(alpha) {}

double GroundState::operator()(double x) const { return alpha_ * xi(spec_, x); }

double GroundState::density(double x) const {
  const double p = (*this)(x);
  return p * p;
}

GroundState ground_state(const WellSpec& spec, const QuadratureOptions& opts) {
  return GroundState(spec, ground_alpha(spec, opts));
}

double ground_wavefunction(const WellSpec& spec, double x,
                           const QuadratureOptions& opts) {
  return ground_alpha(spec, opts) * xi(spec, x);
}

DensityDecomposition density_decomposition(const WellSpec& spec,
                                           const QuadratureOptions& opts) {
  DensityDecomposition d;
  d.alpha = ground_alpha(spec, opts);
  const double alpha_sq = d.alpha * d.alpha;
  const std::size_t n = spec.size();

  d.weights.resize(n);
  d.components.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    d.weights[k] = alpha_sq * spec.weights[k] * spec.weights[k];
    d.components.push_back([seed = spec.seed, a = spec.shifts[k]](double x) {
      const double p = seed.ground_state(x + a);
      return p * p;
    });
  }
  d.overlap_term = [spec, alpha_sq](double x) {
    double cross = 0.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
      const double pk = spec.seed.ground_state(x + spec.shifts[k]);
      for (std::size_t l = k + 1; l < spec.size(); ++l) {
        cross += 2.0 * spec.weights[k] * spec.weights[l] * pk *
                 spec.seed.ground_state(x + spec.shifts[l]);
      }
    }
    return alpha_sq * cross;
  };
  return d;
}

double classical_density(const WellSpec& spec, double x) {
  const double sum_sq = spec.weights.sum_squares();
  double rho = 0.0;
  for (std::size_t n = 0; n < spec.size(); ++n) {
    const double p = spec.seed.ground_state(x + spec.shifts[n]);
    rho += (spec.weights[n] * spec.weights[n] / sum_sq) * p * p;
  }
  return rho;
}

}  // namespace multiwell
