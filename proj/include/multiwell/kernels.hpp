#pragma once

#include <cstddef>

// Array kernels behind the grid-heavy paths: sech fills for potential and
// density sampling, Sturm-sequence eigenvalue counts batched over trial
// energies, and the reductions used by inverse iteration and grid norms.
//
// Every kernel has a scalar reference implementation and, on x86-64 with
// AVX2+FMA, a vector variant selected at runtime. Both variants are callable
// directly (kernels::scalar::..., kernels::avx2::...) so equivalence tests can
// compare them on the same inputs. Reproducibility contract:
//   - sturm_counts and tridiag_residual_inf are bit-identical across backends
//     (fixed evaluation order, no fused operations),
//   - sech_array* agrees to a few ulp (different exp implementations),
//   - dot may differ by rounding (vector accumulators reassociate the sum).

namespace multiwell::kernels {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);

/// Backend selected for the dispatched entry points below. Detected from CPU
/// features on first use; set_backend overrides (throws std::invalid_argument
/// if the requested backend is not supported on this machine).
Backend active_backend();
void set_backend(Backend b);

/// y[i] = sech(x[i])
void sech_array(const double* x, double* y, std::size_t n);
/// y[i] = sech(x[i] + shift)
void sech_array_shifted(const double* x, double shift, double* y, std::size_t n);

/// Plain dot product.
double dot(const double* a, const double* b, std::size_t n);

/// Eigenvalue counts of the symmetric tridiagonal matrix (diag, offdiag) via
/// the Sturm sequence: counts[j] = #{eigenvalues < shifts[j]}. offdiag_sq
/// holds the squared off-diagonal entries (offdiag_sq[i] couples rows i and
/// i+1, so n-1 entries are read). pivmin clamps near-zero pivots.
void sturm_counts(const double* diag, const double* offdiag_sq, std::size_t n,
                  double pivmin, const double* shifts, int* counts,
                  std::size_t m);

/// max_i |(T v)_i - lambda v_i| for the symmetric tridiagonal T.
double tridiag_residual_inf(const double* diag, const double* offdiag,
                            const double* v, std::size_t n, double lambda);

namespace scalar {
void sech_array(const double* x, double* y, std::size_t n);
void sech_array_shifted(const double* x, double shift, double* y,
                        std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
void sturm_counts(const double* diag, const double* offdiag_sq, std::size_t n,
                  double pivmin, const double* shifts, int* counts,
                  std::size_t m);
double tridiag_residual_inf(const double* diag, const double* offdiag,
                            const double* v, std::size_t n, double lambda);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void sech_array(const double* x, double* y, std::size_t n);
void sech_array_shifted(const double* x, double shift, double* y,
                        std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
void sturm_counts(const double* diag, const double* offdiag_sq, std::size_t n,
                  double pivmin, const double* shifts, int* counts,
                  std::size_t m);
double tridiag_residual_inf(const double* diag, const double* offdiag,
                            const double* v, std::size_t n, double lambda);
}  // namespace avx2
#endif

}  // namespace multiwell::kernels
