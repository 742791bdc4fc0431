// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be entered after a runtime CPU check (see
// kernels.cpp). Arithmetic-order notes:
//   - sturm_counts / tridiag_residual_inf evaluate each element with exactly
//     the scalar operation sequence (no FMA contraction), so results are
//     bit-identical to the scalar backend;
//   - dot uses four FMA accumulators, so rounding differs from scalar;
//   - sech uses the polynomial exp below instead of libm exp (few-ulp
//     agreement, saturating to 0 below -708.396 and at the top of the normal
//     range above +709).

#include <cstddef>
#include <cstring>

#include "multiwell/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace multiwell::kernels::avx2 {

namespace {

// exp(x) by Cody-Waite range reduction and a degree-2/3 rational minimax on
// the reduced argument (classic Cephes coefficients).
inline __m256d exp_pd(__m256d x) {
  const __m256d hi = _mm256_set1_pd(709.0);
  const __m256d lo = _mm256_set1_pd(-708.396418532264106224);
  const __m256d log2e = _mm256_set1_pd(1.44269504088896340736);
  const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d one = _mm256_set1_pd(1.0);

  const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
  x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

  const __m256d fx = _mm256_round_pd(
      _mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(fx, c1, x);
  r = _mm256_fnmadd_pd(fx, c2, r);
  const __m256d r2 = _mm256_mul_pd(r, r);

  __m256d px = _mm256_set1_pd(1.26177193074810590878e-4);
  px = _mm256_fmadd_pd(px, r2, _mm256_set1_pd(3.02994407707441961300e-2));
  px = _mm256_fmadd_pd(px, r2, _mm256_set1_pd(9.99999999999999999910e-1));
  px = _mm256_mul_pd(px, r);

  __m256d qx = _mm256_set1_pd(3.00198505138664455042e-6);
  qx = _mm256_fmadd_pd(qx, r2, _mm256_set1_pd(2.52448340349684104192e-3));
  qx = _mm256_fmadd_pd(qx, r2, _mm256_set1_pd(2.27265548208155028766e-1));
  qx = _mm256_fmadd_pd(qx, r2, _mm256_set1_pd(2.00000000000000000005e0));

  const __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
  __m256d result = _mm256_add_pd(one, _mm256_add_pd(e, e));

  // scale by 2^n; n stays within [-1022, 1023] thanks to the clamps
  const __m128i n32 = _mm256_cvtpd_epi32(fx);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i pow2 =
      _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  result = _mm256_mul_pd(result, _mm256_castsi256_pd(pow2));
  return _mm256_andnot_pd(underflow, result);
}

inline __m256d sech_pd(__m256d x) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const __m256d ax = _mm256_andnot_pd(sign_mask, x);
  const __m256d t = exp_pd(_mm256_xor_pd(ax, sign_mask));  // exp(-|x|)
  const __m256d two_t = _mm256_add_pd(t, t);
  const __m256d den = _mm256_fmadd_pd(t, t, _mm256_set1_pd(1.0));
  return _mm256_div_pd(two_t, den);
}

inline double hmax_pd(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

inline double hsum_pd(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  s = _mm_add_sd(s, _mm_unpackhi_pd(s, s));
  return _mm_cvtsd_f64(s);
}

}  // namespace

void sech_array_shifted(const double* x, double shift, double* y,
                        std::size_t n) {
  const __m256d vshift = _mm256_set1_pd(shift);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_add_pd(_mm256_loadu_pd(x + i), vshift);
    _mm256_storeu_pd(y + i, sech_pd(v));
  }
  if (i < n) {
    double in[4] = {0.0, 0.0, 0.0, 0.0};
    double out[4];
    std::memcpy(in, x + i, (n - i) * sizeof(double));
    const __m256d v = _mm256_add_pd(_mm256_loadu_pd(in), vshift);
    _mm256_storeu_pd(out, sech_pd(v));
    std::memcpy(y + i, out, (n - i) * sizeof(double));
  }
}

void sech_array(const double* x, double* y, std::size_t n) {
  sech_array_shifted(x, 0.0, y, n);
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
    acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8),
                           _mm256_loadu_pd(b + i + 8), acc2);
    acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12),
                           _mm256_loadu_pd(b + i + 12), acc3);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                           acc0);
  }
  double acc = hsum_pd(
      _mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3)));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void sturm_counts(const double* diag, const double* offdiag_sq, std::size_t n,
                  double pivmin, const double* shifts, int* counts,
                  std::size_t m) {
  const __m256d vpivmin = _mm256_set1_pd(pivmin);
  const __m256d vnegpiv = _mm256_set1_pd(-pivmin);
  const __m256d vzero = _mm256_setzero_pd();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);

  for (std::size_t j = 0; j < m; j += 4) {
    double xs[4] = {1e300, 1e300, 1e300, 1e300};  // pad lanes are discarded
    const std::size_t lanes = (m - j < 4) ? (m - j) : 4;
    std::memcpy(xs, shifts + j, lanes * sizeof(double));
    const __m256d x = _mm256_loadu_pd(xs);

    __m256i cnt = _mm256_setzero_si256();
    __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), x);
    __m256d small =
        _mm256_cmp_pd(_mm256_andnot_pd(sign_mask, q), vpivmin, _CMP_LE_OQ);
    q = _mm256_blendv_pd(q, vnegpiv, small);
    cnt = _mm256_sub_epi64(
        cnt, _mm256_castpd_si256(_mm256_cmp_pd(q, vzero, _CMP_LT_OQ)));

    for (std::size_t i = 1; i < n; ++i) {
      const __m256d di = _mm256_set1_pd(diag[i]);
      const __m256d e2 = _mm256_set1_pd(offdiag_sq[i - 1]);
      q = _mm256_sub_pd(_mm256_sub_pd(di, x), _mm256_div_pd(e2, q));
      small =
          _mm256_cmp_pd(_mm256_andnot_pd(sign_mask, q), vpivmin, _CMP_LE_OQ);
      q = _mm256_blendv_pd(q, vnegpiv, small);
      cnt = _mm256_sub_epi64(
          cnt, _mm256_castpd_si256(_mm256_cmp_pd(q, vzero, _CMP_LT_OQ)));
    }

    alignas(32) long long out[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(out), cnt);
    for (std::size_t l = 0; l < lanes; ++l)
      counts[j + l] = static_cast<int>(out[l]);
  }
}

double tridiag_residual_inf(const double* diag, const double* offdiag,
                            const double* v, std::size_t n, double lambda) {
  if (n == 0) return 0.0;
  if (n < 6) return scalar::tridiag_residual_inf(diag, offdiag, v, n, lambda);

  const __m256d vlam = _mm256_set1_pd(lambda);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d vmax = _mm256_setzero_pd();

  std::size_t i = 1;
  for (; i + 4 <= n - 1; i += 4) {
    const __m256d d = _mm256_loadu_pd(diag + i);
    const __m256d vi = _mm256_loadu_pd(v + i);
    // same operation order as the scalar kernel: no FMA contraction here
    __m256d s = _mm256_mul_pd(_mm256_sub_pd(d, vlam), vi);
    s = _mm256_add_pd(
        s, _mm256_mul_pd(_mm256_loadu_pd(offdiag + i - 1),
                         _mm256_loadu_pd(v + i - 1)));
    s = _mm256_add_pd(s, _mm256_mul_pd(_mm256_loadu_pd(offdiag + i),
                                       _mm256_loadu_pd(v + i + 1)));
    vmax = _mm256_max_pd(vmax, _mm256_andnot_pd(sign_mask, s));
  }
  double worst = hmax_pd(vmax);

  auto element = [&](std::size_t idx) {
    double s = (diag[idx] - lambda) * v[idx];
    if (idx > 0) s = s + offdiag[idx - 1] * v[idx - 1];
    if (idx + 1 < n) s = s + offdiag[idx] * v[idx + 1];
    const double r = s < 0.0 ? -s : s;
    if (r > worst) worst = r;
  };
  element(0);
  for (; i < n; ++i) element(i);
  return worst;
}

}  // namespace multiwell::kernels::avx2

#endif  // x86-64
