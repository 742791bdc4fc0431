#include "multiwell/kernels.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace multiwell::kernels {

namespace {

Backend detect() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return Backend::avx2;
#endif
  return Backend::scalar;
}

std::atomic<int> g_backend{-1};

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  if (b == Backend::scalar) return true;
  return detect() == Backend::avx2;
}

Backend active_backend() {
  int v = g_backend.load(std::memory_order_relaxed);
  if (v < 0) {
    v = static_cast<int>(detect());
    g_backend.store(v, std::memory_order_relaxed);
  }
  return static_cast<Backend>(v);
}

void set_backend(Backend b) {
  if (!backend_supported(b))
    throw std::invalid_argument(std::string("kernel backend not supported: ") +
                                backend_name(b));
  g_backend.store(static_cast<int>(b), std::memory_order_relaxed);
}

#if defined(__x86_64__) || defined(_M_X64)
#define MULTIWELL_DISPATCH(call)                              \
  if (active_backend() == Backend::avx2) return avx2::call;   \
  return scalar::call
#else
#define MULTIWELL_DISPATCH(call) return scalar::call
#endif

void sech_array(const double* x, double* y, std::size_t n) {
  MULTIWELL_DISPATCH(sech_array(x, y, n));
}

void sech_array_shifted(const double* x, double shift, double* y,
                        std::size_t n) {
  MULTIWELL_DISPATCH(sech_array_shifted(x, shift, y, n));
}

double dot(const double* a, const double* b, std::size_t n) {
  MULTIWELL_DISPATCH(dot(a, b, n));
}

void sturm_counts(const double* diag, const double* offdiag_sq, std::size_t n,
                  double pivmin, const double* shifts, int* counts,
                  std::size_t m) {
  MULTIWELL_DISPATCH(sturm_counts(diag, offdiag_sq, n, pivmin, shifts, counts, m));
}

double tridiag_residual_inf(const double* diag, const double* offdiag,
                            const double* v, std::size_t n, double lambda) {
  MULTIWELL_DISPATCH(tridiag_residual_inf(diag, offdiag, v, n, lambda));
}

#undef MULTIWELL_DISPATCH

}  // namespace multiwell::kernels
