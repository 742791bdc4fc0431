#include "multiwell/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace multiwell {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss weights.
constexpr double k_xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double k_wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double k_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double integral;
  double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = k_wgk[7] * fc;
  double gauss = k_wg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * k_xgk[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += k_wgk[i] * sum;
    if (i % 2 == 1) gauss += k_wg[i / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

struct PanelOrder {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    return lhs.error < rhs.error;
  }
};

}  // namespace

double quadrature(const std::function<double(double)>& f, double x_min,
                  double x_max, const QuadratureOptions& opts) {
  if (!(x_min < x_max))
    throw std::invalid_argument("quadrature: domain must satisfy x_min < x_max");
  if (!(opts.abs_tol > 0.0))
    throw std::invalid_argument("quadrature: tolerance must be positive");

  const int initial =
      std::max(1, static_cast<int>(
                      std::ceil((x_max - x_min) / opts.max_initial_width)));

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> panels;
  double total = 0.0, total_err = 0.0;
  const double width = (x_max - x_min) / initial;
  for (int i = 0; i < initial; ++i) {
    Panel p = evaluate_panel(f, x_min + i * width, x_min + (i + 1) * width);
    total += p.integral;
    total_err += p.error;
    panels.push(p);
  }

  int count = initial;
  const double min_width =
      (x_max - x_min) * std::numeric_limits<double>::epsilon();
  while (total_err > opts.abs_tol) {
    if (count >= opts.max_panels)
      throw QuadratureError(
          "quadrature: subdivision limit reached before requested tolerance",
          total, total_err);
    Panel worst = panels.top();
    if (worst.b - worst.a <= min_width)
      throw QuadratureError(
          "quadrature: panel width at machine limit before requested tolerance",
          total, total_err);
    panels.pop();
    total -= worst.integral;
    total_err -= worst.error;

    const double mid = 0.5 * (worst.a + worst.b);
    for (const Panel& half :
         {evaluate_panel(f, worst.a, mid), evaluate_panel(f, mid, worst.b)}) {
      total += half.integral;
      total_err += half.error;
      panels.push(half);
    }
    ++count;
  }
  return total;
}

double quadrature(const std::function<double(double)>& f, double x_min,
                  double x_max, double tol) {
  QuadratureOptions opts;
  opts.abs_tol = tol;
  return quadrature(f, x_min, x_max, opts);
}

double dispersion(const std::function<double(double)>& density, double x_min,
                  double x_max, double tol) {
  const double m1 =
      quadrature([&](double x) { return x * density(x); }, x_min, x_max, tol);
  const double m2 = quadrature([&](double x) { return x * x * density(x); },
                               x_min, x_max, tol);
  return std::sqrt(m2 - m1 * m1);
}

}  // namespace multiwell
