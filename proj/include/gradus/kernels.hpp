#pragma once

// Double-precision screening kernels for lattice inner products.
//
// The enumeration and decomposition code evaluates millions of small
// quadratic forms. These kernels compute them in double precision so that
// clear-cut cases can be decided without MPFR; anything close to a decision
// threshold is recomputed at working precision by the caller.
//
// Each kernel has a scalar reference implementation and SIMD variants
// (AVX2+FMA on x86-64, NEON on AArch64). The variant is chosen once at
// runtime from the CPU features; setting GRADUS_KERNELS=scalar in the
// environment forces the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace gradus::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
  Isa isa;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // out[k] = rows[k*n .. k*n+n) . w  for k < count
  void (*dots)(const double* rows, std::size_t count, std::size_t n, const double* w, double* out);
  // out[k] = x_k^T G x_k with x_k = rows[k*n .. k*n+n), G row-major n x n
  void (*quadratic_forms)(const double* gram, std::size_t n, const double* rows, std::size_t count,
                          double* out);
};

bool available(Isa isa);
const KernelTable& table(Isa isa);
const KernelTable& active();
std::string_view isa_name(Isa isa);

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

inline void dots(std::span<const double> rows, std::size_t n, std::span<const double> w,
                 std::span<double> out) {
  active().dots(rows.data(), out.size(), n, w.data(), out.data());
}

inline void quadratic_forms(std::span<const double> gram, std::size_t n, std::span<const double> rows,
                            std::span<double> out) {
  active().quadratic_forms(gram.data(), n, rows.data(), out.size(), out.data());
}

namespace detail {
extern const KernelTable scalar_table;
#if defined(GRADUS_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(GRADUS_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

}  // namespace gradus::kernels
