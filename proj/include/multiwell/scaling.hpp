#pragma once

#include <functional>

namespace multiwell {

inline constexpr double k_hbar = 1.054571817e-34;         // J s
inline constexpr double k_quoted_mass = 1.7e-27;          // kg, as quoted for "electron rest mass"
inline constexpr double k_electron_mass = 9.1093837e-31;  // kg
inline constexpr double k_default_well_width = 5e-8;      // m, heterostructure well width
inline constexpr double k_quoted_seed_dispersion = 2.34;  // quoted adimensional D_x
inline constexpr double k_coherence_time = 1e-4;          // s, dissipation cutoff

/// Maps adimensional quantities to SI for a particle of the given mass
/// confined on the length scale L: energies scale by hbar^2/(2 m L^2),
/// frequencies by hbar/(2 m L^2), lengths by L.
class PhysicalScale {
 public:
  PhysicalScale(double mass_kg, double length_m);

  double mass() const { return mass_; }
  double length() const { return length_; }
  double energy_unit() const { return energy_unit_; }        // J
  double frequency_unit() const { return frequency_unit_; }  // s^-1

  double energy_to_si(double e) const { return e * energy_unit_; }
  double energy_from_si(double e_si) const { return e_si / energy_unit_; }
  double frequency_to_si(double omega) const { return omega * frequency_unit_; }
  double frequency_from_si(double omega_si) const {
    return omega_si / frequency_unit_;
  }
  double length_to_si(double x) const { return x * length_; }
  double length_from_si(double xi) const { return xi / length_; }

  /// U(xi) = (hbar^2/2mL^2) V(xi/L), xi in meters, result in joules.
  std::function<double(double)> potential_to_si(
      std::function<double(double)> v) const;
  /// psi~(xi) = L^(-1/2) psi(xi/L); preserves L2 normalization in xi.
  std::function<double(double)> wavefn_to_si(
      std::function<double(double)> psi) const;

 private:
  double mass_;
  double length_;
  double energy_unit_;
  double frequency_unit_;
};

/// L from a physical dispersion target: L = D_xi / D_x.
double derive_length(double dispersion_si_m, double dispersion_adimensional);

/// Whether an oscillation at Omega (SI) completes a period within the
/// coherence time tau: reports Omega * tau and the comparison flag.
struct CoherenceComparison {
  double omega_si = 0.0;
  double tau_s = 0.0;
  double omega_tau = 0.0;
  bool oscillation_observable = false;
};

CoherenceComparison compare_with_coherence_time(double omega_si,
                                                double tau_s = k_coherence_time);

}  // namespace multiwell
