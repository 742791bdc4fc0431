#include "multiwell/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace multiwell {

PhysicalScale::PhysicalScale(double mass_kg, double length_m)
    : mass_(mass_kg), length_(length_m) {
  if (!(mass_ > 0.0))
    throw std::invalid_argument("PhysicalScale: mass must be positive");
  if (!(length_ > 0.0))
    throw std::invalid_argument("PhysicalScale: length must be positive");
  const double denom = 2.0 * mass_ * length_ * length_;
  energy_unit_ = k_hbar * k_hbar / denom;
  frequency_unit_ = k_hbar / denom;
}

std::function<double(double)> PhysicalScale::potential_to_si(
    std::function<double(double)> v) const {
  return [unit = energy_unit_, l = length_, v = std::move(v)](double xi) {
    return unit * v(xi / l);
  };
}

std::function<double(double)> PhysicalScale::wavefn_to_si(
    std::function<double(double)> psi) const {
  return [scale = 1.0 / std::sqrt(length_), l = length_,
          psi = std::move(psi)](double xi) { return scale * psi(xi / l); };
}

double derive_length(double dispersion_si_m, double dispersion_adimensional) {
  if (!(dispersion_si_m > 0.0) || !(dispersion_adimensional > 0.0))
    throw std::invalid_argument("derive_length: dispersions must be positive");
  return dispersion_si_m / dispersion_adimensional;
}

CoherenceComparison compare_with_coherence_time(double omega_si, double tau_s) {
  CoherenceComparison c;
  c.omega_si = omega_si;
  c.tau_s = tau_s;
  c.omega_tau = omega_si * tau_s;
  // observable when at least one full period fits inside tau
  c.oscillation_observable = c.omega_tau >= 2.0 * M_PI;
  return c;
}

}  // namespace multiwell
