#include <arm_neon.h>

#include "gradus/kernels.hpp"

namespace gradus::kernels::detail {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

// Two rows per step; lane r of the accumulator belongs to row k + r.
void dots_neon(const double* rows, std::size_t count, std::size_t n, const double* w, double* out) {
  std::size_t k = 0;
  for (; k + 2 <= count; k += 2) {
    const double* r0 = rows + k * n;
    const double* r1 = r0 + n;
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      float64x2_t col = vsetq_lane_f64(r1[j], vdupq_n_f64(r0[j]), 1);
      acc = vfmaq_n_f64(acc, col, w[j]);
    }
    vst1q_f64(out + k, acc);
  }
  for (; k < count; ++k) out[k] = dot_neon(rows + k * n, w, n);
}

void quadratic_forms_neon(const double* gram, std::size_t n, const double* rows, std::size_t count,
                          double* out) {
  std::size_t k = 0;
  for (; k + 2 <= count; k += 2) {
    const double* r0 = rows + k * n;
    const double* r1 = r0 + n;
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double* g = gram + i * n;
      float64x2_t gx = vdupq_n_f64(0.0);
      for (std::size_t j = 0; j < n; ++j) {
        float64x2_t col = vsetq_lane_f64(r1[j], vdupq_n_f64(r0[j]), 1);
        gx = vfmaq_n_f64(gx, col, g[j]);
      }
      float64x2_t xi = vsetq_lane_f64(r1[i], vdupq_n_f64(r0[i]), 1);
      acc = vfmaq_f64(acc, xi, gx);
    }
    vst1q_f64(out + k, acc);
  }
  for (; k < count; ++k) {
    const double* x = rows + k * n;
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * dot_neon(gram + i * n, x, n);
    out[k] = acc;
  }
}

}  // namespace

const KernelTable neon_table{Isa::Neon, dot_neon, dots_neon, quadratic_forms_neon};

}  // namespace gradus::kernels::detail
