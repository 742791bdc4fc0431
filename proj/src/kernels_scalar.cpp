#include <cmath>
#include <cstddef>

#include "multiwell/kernels.hpp"

namespace multiwell::kernels::scalar {

void sech_array(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::exp(-std::abs(x[i]));
    y[i] = 2.0 * t / (1.0 + t * t);
  }
}

void sech_array_shifted(const double* x, double shift, double* y,
                        std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::exp(-std::abs(x[i] + shift));
    y[i] = 2.0 * t / (1.0 + t * t);
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void sturm_counts(const double* diag, const double* offdiag_sq, std::size_t n,
                  double pivmin, const double* shifts, int* counts,
                  std::size_t m) {
  for (std::size_t j = 0; j < m; ++j) {
    const double x = shifts[j];
    int cnt = 0;
    double q = diag[0] - x;
    if (std::abs(q) <= pivmin) q = -pivmin;
    if (q < 0.0) ++cnt;
    for (std::size_t i = 1; i < n; ++i) {
      q = (diag[i] - x) - offdiag_sq[i - 1] / q;
      if (std::abs(q) <= pivmin) q = -pivmin;
      if (q < 0.0) ++cnt;
    }
    counts[j] = cnt;
  }
}

double tridiag_residual_inf(const double* diag, const double* offdiag,
                            const double* v, std::size_t n, double lambda) {
  if (n == 0) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = (diag[i] - lambda) * v[i];
    if (i > 0) s = s + offdiag[i - 1] * v[i - 1];
    if (i + 1 < n) s = s + offdiag[i] * v[i + 1];
    const double r = std::abs(s);
    if (r > worst) worst = r;
  }
  return worst;
}

}  // namespace multiwell::kernels::scalar
