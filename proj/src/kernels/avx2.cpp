// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "gradus/kernels.hpp"

namespace gradus::kernels::detail {

namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

// Four rows per step; lane r of the accumulator belongs to row k + r.
void dots_avx2(const double* rows, std::size_t count, std::size_t n, const double* w, double* out) {
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const double* r0 = rows + k * n;
    const double* r1 = r0 + n;
    const double* r2 = r1 + n;
    const double* r3 = r2 + n;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n; ++j) {
      __m256d col = _mm256_set_pd(r3[j], r2[j], r1[j], r0[j]);
      acc = _mm256_fmadd_pd(col, _mm256_broadcast_sd(w + j), acc);
    }
    _mm256_storeu_pd(out + k, acc);
  }
  for (; k < count; ++k) out[k] = dot_avx2(rows + k * n, w, n);
}

void quadratic_forms_avx2(const double* gram, std::size_t n, const double* rows, std::size_t count,
                          double* out) {
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const double* r0 = rows + k * n;
    const double* r1 = r0 + n;
    const double* r2 = r1 + n;
    const double* r3 = r2 + n;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n; ++i) {
      const double* g = gram + i * n;
      __m256d gx = _mm256_setzero_pd();
      for (std::size_t j = 0; j < n; ++j) {
        __m256d col = _mm256_set_pd(r3[j], r2[j], r1[j], r0[j]);
        gx = _mm256_fmadd_pd(col, _mm256_broadcast_sd(g + j), gx);
      }
      __m256d xi = _mm256_set_pd(r3[i], r2[i], r1[i], r0[i]);
      acc = _mm256_fmadd_pd(xi, gx, acc);
    }
    _mm256_storeu_pd(out + k, acc);
  }
  for (; k < count; ++k) {
    const double* x = rows + k * n;
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * dot_avx2(gram + i * n, x, n);
    out[k] = acc;
  }
}

}  // namespace

const KernelTable avx2_table{Isa::Avx2, dot_avx2, dots_avx2, quadratic_forms_avx2};

}  // namespace gradus::kernels::detail
