#include "gradus/kernels.hpp"

namespace gradus::kernels::detail {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void dots_scalar(const double* rows, std::size_t count, std::size_t n, const double* w, double* out) {
  for (std::size_t k = 0; k < count; ++k) out[k] = dot_scalar(rows + k * n, w, n);
}

void quadratic_forms_scalar(const double* gram, std::size_t n, const double* rows, std::size_t count,
                            double* out) {
  for (std::size_t k = 0; k < count; ++k) {
    const double* x = rows + k * n;
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      acc += x[i] * dot_scalar(gram + i * n, x, n);
    }
    out[k] = acc;
  }
}

}  // namespace

const KernelTable scalar_table{Isa::Scalar, dot_scalar, dots_scalar, quadratic_forms_scalar};

}  // namespace gradus::kernels::detail
