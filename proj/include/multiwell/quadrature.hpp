#pragma once

#include <functional>
#include <stdexcept>

namespace multiwell {

/// Thrown when adaptive refinement hits the subdivision limit before reaching
/// the requested tolerance; carries the best estimate obtained so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best, double achieved)
      : std::runtime_error(what), best_estimate(best),
        achieved_error(achieved) {}
  double best_estimate;
  double achieved_error;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  int max_panels = 4000;
  /// Initial panel width cap; keeps narrow well/overlap bumps from slipping
  /// between the nodes of a single wide panel.
  double max_initial_width = 2.0;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [x_min, x_max] to
/// absolute tolerance tol.
double quadrature(const std::function<double(double)>& f, double x_min,
                  double x_max, double tol);
double quadrature(const std::function<double(double)>& f, double x_min,
                  double x_max, const QuadratureOptions& opts);

/// sqrt(<x^2> - <x>^2) of a normalized density on [x_min, x_max].
double dispersion(const std::function<double(double)>& density, double x_min,
                  double x_max, double tol = 1e-12);

}  // namespace multiwell
