#include <random>

#include "doctest.h"
#include "gradus/errors.hpp"
#include "gradus/intlinalg.hpp"
#include "oracles.hpp"

using namespace gradus;

namespace {

oracle::Mat to_oracle(const IntMatrix& m) {
  oracle::Mat out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r));
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> k(-3, 3);
  for (int step = 0; step < 12; ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) {
      u.negate_row(a);
    } else {
      u.add_row_multiple(a, b, k(rng));
      if (step % 4 == 0) u.swap_rows(a, b);
    }
  }
  return u;
}

void check_hnf_shape(const IntMatrix& h) {
  long last_pivot = -1;
  bool zero_seen = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      zero_seen = true;
      continue;
    }
    REQUIRE_FALSE(zero_seen);
    REQUIRE(static_cast<long>(c) > last_pivot);
    REQUIRE(h(r, c) > 0);
    for (std::size_t above = 0; above < r; ++above) {
      REQUIRE(h(above, c) >= 0);
      REQUIRE(h(above, c) < h(r, c));
    }
    last_pivot = static_cast<long>(c);
  }
}

}  // namespace

TEST_CASE("hnf of identity and zero") {
  auto id = hnf(IntMatrix::identity(2));
  CHECK(id.h == IntMatrix::identity(2));
  CHECK(id.u == IntMatrix::identity(2));
  auto z = hnf(IntMatrix{{0, 0}, {0, 0}});
  CHECK(z.h.is_zero());
  CHECK(abs_det(z.u) == 1);
}

TEST_CASE("hnf of [[2,4],[1,3]] matches the brute-force oracle") {
  auto r = hnf(IntMatrix{{2, 4}, {1, 3}});
  CHECK(abs_det(r.h) == 2);
  // Oracle: the canonical basis is [[a, b], [0, c]] with a the gcd of the
  // first column, c = |det| / a, and b the unique value in [0, c) putting
  // (a, b) in the lattice.
  oracle::Mat lattice{{2, 4}, {1, 3}};
  mpz_class a = 1, c = 2, b = -1;
  for (long t = 0; t < 2; ++t)
    if (oracle::in_row_lattice(lattice, {a, mpz_class(t)})) b = t;
  CHECK(r.h == IntMatrix{{1, b.get_si()}, {0, 2}});
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    IntMatrix m = random_matrix(rng, rows, cols, 6);
    if (trial % 5 == 0 && rows > 1) {  // rank deficient
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c);
    }
    auto r = hnf(m);
    check_hnf_shape(r.h);
    CHECK(r.u * m == r.h);
    CHECK(abs_det(r.u) == 1);
    // Canonical: invariant under left multiplication by unimodular matrices.
    CHECK(hnf(random_unimodular(rng, rows) * m).h == r.h);
  }
}

TEST_CASE("hnf rows generate the same lattice (Cramer oracle)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    IntMatrix m = random_matrix(rng, n, n, 5);
    if (abs_det(m) == 0) continue;
    auto h = hnf(m).h;
    for (std::size_t r = 0; r < n; ++r) {
      CHECK(oracle::in_row_lattice(to_oracle(h), m.row_vector(r)));
      CHECK(oracle::in_row_lattice(to_oracle(m), h.row_vector(r)));
    }
  }
}

TEST_CASE("snf examples") {
  CHECK(snf(IntMatrix{{2, 0}, {0, 3}}).s == IntMatrix{{1, 0}, {0, 6}});
  CHECK(snf(IntMatrix::identity(3)).s == IntMatrix::identity(3));
  CHECK(snf(IntMatrix(2, 3)).s.is_zero());
}

TEST_CASE("snf agrees with determinantal divisors") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 3) % 4;
    IntMatrix m = random_matrix(rng, rows, cols, 8);
    auto r = snf(m);
    CHECK(r.u * m * r.v == r.s);
    CHECK(abs_det(r.u) == 1);
    CHECK(abs_det(r.v) == 1);
    auto expect = oracle::invariant_factors(to_oracle(m), cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) CHECK(r.s(i, j) == 0);
    for (std::size_t k = 0; k < expect.size(); ++k) CHECK(r.s(k, k) == expect[k]);
  }
}

TEST_CASE("kernel_saturated") {
  CHECK(kernel_saturated(IntMatrix::identity(3)).empty());
  CHECK(kernel_saturated(IntMatrix(3, 3)) == SublatticeBasis::full(3));
  auto k = kernel_saturated(IntMatrix{{2, 0}, {0, 0}});
  CHECK(k == SublatticeBasis::span(2, std::vector<IntVector>{make_int_vector({0, 1})}));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 2, 4);
    auto ker = kernel_saturated(m);
    CHECK(ker.rank() + rank(m) == 4);
    for (std::size_t r = 0; r < ker.rank(); ++r) CHECK(is_zero(mul(ker.basis().row(r), m)));
    CHECK(ker.saturation_index() == 1);
  }
}

TEST_CASE("direct_sum_index") {
  auto e1 = SublatticeBasis::span(2, std::vector<IntVector>{make_int_vector({1, 0})});
  auto e2 = SublatticeBasis::span(2, std::vector<IntVector>{make_int_vector({0, 1})});
  auto two_e1 = SublatticeBasis::span(2, std::vector<IntVector>{make_int_vector({2, 0})});
  CHECK(direct_sum_index(std::vector{e1, e2}, 2) == 1);
  CHECK(direct_sum_index(std::vector{two_e1, e2}, 2) == 2);
  try {
    direct_sum_index(std::vector{e1}, 2);
    FAIL("expected InfiniteIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteIndex);
  }
}

TEST_CASE("solve_left and membership") {
  IntMatrix w{{2, 0}, {0, 3}};
  CHECK(solve_left(w, make_int_vector({4, 9})) == make_int_vector({2, 3}));
  CHECK_FALSE(solve_left(w, make_int_vector({1, 0})).has_value());
  auto lat = SublatticeBasis::span(2, w);
  CHECK(lat.contains(make_int_vector({-2, 6})));
  CHECK_FALSE(lat.contains(make_int_vector({2, 1})));
  CHECK(lat.saturation_index() == 6);
  CHECK((lat + SublatticeBasis::span(2, std::vector<IntVector>{make_int_vector({1, 1})})) == SublatticeBasis::full(2));
}
