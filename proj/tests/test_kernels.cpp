#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "gradus/kernels.hpp"

using namespace gradus::kernels;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Relative agreement up to reassociation error: |a - b| <= 1e-12 * (1 + mag).
bool close(double a, double b, double mag) { return std::abs(a - b) <= 1e-12 * (1 + mag); }

std::vector<Isa> variants() {
  std::vector<Isa> out;
  for (Isa i : {Isa::Avx2, Isa::Neon})
    if (available(i)) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("scalar reference on a hand example") {
  const KernelTable& s = table(Isa::Scalar);
  std::vector<double> a{1, 2, 3}, b{4, -5, 6};
  CHECK(s.dot(a.data(), b.data(), 3) == 12);
  std::vector<double> g{2, 1, 1, 2}, rows{1, 0, 1, 1, 1, -1}, out(3);
  s.quadratic_forms(g.data(), 2, rows.data(), 3, out.data());
  CHECK(out == std::vector<double>{2, 6, 2});
  std::vector<double> w{1, 1}, d(3);
  s.dots(rows.data(), 3, 2, w.data(), d.data());
  CHECK(d == std::vector<double>{1, 2, 0});
}

TEST_CASE("SIMD variants agree with the scalar reference") {
  const KernelTable& s = table(Isa::Scalar);
  INFO("active kernel: " << isa_name(active().isa));
  std::mt19937_64 rng(3);
  for (Isa isa : variants()) {
    const KernelTable& v = table(isa);
    CAPTURE(isa_name(isa));
    for (std::size_t n = 1; n <= 13; ++n)
      for (std::size_t count : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 17u, 64u}) {
        auto g = random_vec(rng, n * n, 10);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < i; ++j) g[i * n + j] = g[j * n + i];
        auto rows = random_vec(rng, n * count, 20);
        auto w = random_vec(rng, n, 5);

        CHECK(close(v.dot(rows.data(), w.data(), n), s.dot(rows.data(), w.data(), n), 100.0 * n));

        std::vector<double> a(count), b(count);
        v.dots(rows.data(), count, n, w.data(), a.data());
        s.dots(rows.data(), count, n, w.data(), b.data());
        for (std::size_t k = 0; k < count; ++k) CHECK(close(a[k], b[k], 100.0 * n));

        v.quadratic_forms(g.data(), n, rows.data(), count, a.data());
        s.quadratic_forms(g.data(), n, rows.data(), count, b.data());
        for (std::size_t k = 0; k < count; ++k) CHECK(close(a[k], b[k], 4000.0 * n * n));
      }
  }
}

TEST_CASE("integer inputs give bit-identical results") {
  // Small integers make every partial sum exact, so all variants must agree
  // exactly whatever the summation order.
  const KernelTable& s = table(Isa::Scalar);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  for (Isa isa : variants()) {
    const KernelTable& v = table(isa);
    for (std::size_t n = 1; n <= 9; ++n) {
      std::vector<double> g(n * n), rows(n * 11), a(11), b(11);
      for (auto& x : g) x = d(rng);
      for (auto& x : rows) x = d(rng);
      v.quadratic_forms(g.data(), n, rows.data(), 11, a.data());
      s.quadratic_forms(g.data(), n, rows.data(), 11, b.data());
      CHECK(a == b);
    }
  }
}
