#include <complex>

#include "doctest.h"
#include "gradus/embeddings.hpp"
#include "gradus/errors.hpp"
#include "gradus/fixtures.hpp"
#include "oracles.hpp"

using namespace gradus;

namespace {

using cld = std::complex<long double>;

// Durand-Kerner on a monic polynomial, constant term first.
std::vector<cld> roots_oracle(const std::vector<long>& f) {
  const std::size_t n = f.size() - 1;
  std::vector<cld> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(cld(0.4L, 0.9L), static_cast<int>(k));
  auto eval = [&](cld x) {
    cld p = 0;
    for (std::size_t i = f.size(); i-- > 0;) p = p * x + static_cast<long double>(f[i]);
    return p;
  };
  for (int it = 0; it < 500; ++it)
    for (std::size_t k = 0; k < n; ++k) {
      cld denom = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      z[k] -= eval(z[k]) / denom;
    }
  return z;
}

// Gram of Z[X]/(f) in the power basis: sum over roots r of r^i conj(r)^j.
std::vector<long double> monogenic_gram_oracle(const std::vector<long>& f) {
  const std::size_t n = f.size() - 1;
  std::vector<long double> g(n * n, 0);
  for (const cld& r : roots_oracle(f))
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        g[i * n + j] += (std::pow(r, static_cast<int>(i)) * std::conj(std::pow(r, static_cast<int>(j)))).real();
  return g;
}

RunConfig cfg(long precision = 192, std::uint64_t seed = 1) {
  RunConfig c;
  c.precision = precision;
  c.seed = seed;
  return c;
}

double to_d(const Real& x) { return x.to_double(); }

}  // namespace

TEST_CASE("embeddings of Z[C2], Z and Z[sqrt 2]") {
  auto e = compute_embeddings(group_ring({2}).order, 192, 1);
  REQUIRE(e.sigma.size() == 2);
  // Rows sorted lexicographically: (1, -1) before (1, 1).
  CHECK(to_d(e.sigma[0][1].re) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(to_d(e.sigma[1][1].re) == doctest::Approx(1.0).epsilon(1e-15));
  for (const auto& row : e.sigma) CHECK(to_d(row[0].re) == doctest::Approx(1.0).epsilon(1e-15));

  auto z = compute_embeddings(monogenic_order({0, 1}), 192, 1);
  REQUIRE(z.sigma.size() == 1);
  CHECK(to_d(z.sigma[0][0].re) == 1.0);

  auto s = compute_embeddings(monogenic_order({-2, 0, 1}), 192, 1);
  CHECK(to_d(s.sigma[0][1].re) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
  CHECK(to_d(s.sigma[1][1].re) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(s.residual <= Real::pow2(-96, 192));
}

TEST_CASE("Gram of group rings is #G times the identity") {
  for (std::vector<long> f : {std::vector<long>{2}, {3}, {4}, {2, 2}, {6}}) {
    Order a = group_ring(f).order;
    GramForm g = canonical_gram(a, cfg());
    const long k = static_cast<long>(a.rank());
    for (std::size_t i = 0; i < g.n(); ++i)
      for (std::size_t j = 0; j < g.n(); ++j)
        CHECK(g.is_zero(g(i, j) - Real(i == j ? k : 0, g.precision())));
  }
}

TEST_CASE("Gram of Z[sqrt 2] and Z[i]") {
  GramForm g = canonical_gram(monogenic_order({-2, 0, 1}), cfg());
  CHECK(g.is_zero(g(0, 0) - Real(2, 192)));
  CHECK(g.is_zero(g(1, 1) - Real(4, 192)));
  CHECK(g.is_zero(g(0, 1)));
  GramForm gi = canonical_gram(monogenic_order({1, 0, 1}), cfg());
  CHECK(gi.is_zero(gi(0, 0) - Real(2, 192)));
  CHECK(gi.is_zero(gi(1, 1) - Real(2, 192)));
  CHECK(gi.is_zero(gi(0, 1)));
}

TEST_CASE("Gram of monogenic orders matches a Durand-Kerner oracle") {
  for (std::vector<long> f : {std::vector<long>{-2, 0, 1}, {1, 0, 1}, {-1, -1, 1}, {-2, 0, 0, 1}, {1, 1, 1, 1, 1},
                              {3, -1, 0, 1}, {-5, 0, 1}}) {
    auto expect = monogenic_gram_oracle(f);
    GramForm g = canonical_gram(monogenic_order(f), cfg());
    const std::size_t n = g.n();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(to_d(g(i, j)) == doctest::Approx(static_cast<double>(expect[i * n + j])).epsilon(1e-9).scale(1));
  }
}

TEST_CASE("totally real Gram equals the exact trace form") {
  for (const char* name : {"zsqrt2", "zsqrt5", "zgolden", "zxz", "parity5", "zc2xc2"}) {
    Order a = example_order(name);
    IntMatrix t = trace_form(a);
    GramForm g = canonical_gram(a, cfg());
    for (std::size_t i = 0; i < a.rank(); ++i)
      for (std::size_t j = 0; j < a.rank(); ++j) CHECK(g.is_zero(g(i, j) - Real(t(i, j), g.precision())));
  }
}

TEST_CASE("<1,1> equals the rank") {
  for (const auto& name : example_names()) {
    Order a = example_order(name);
    if (!is_reduced(a)) continue;
    GramForm g = canonical_gram(a, cfg());
    CHECK(g.is_zero(g.norm(a.one()) - Real(static_cast<long>(a.rank()), g.precision())));
  }
}

TEST_CASE("Gram does not depend on the seed or precision beyond tau") {
  for (const char* name : {"zeta5", "zeta3cbrt2", "zc6"}) {
    Order a = example_order(name);
    GramForm base = canonical_gram(a, cfg(192, 1));
    for (auto [p, s] : {std::pair{128L, 2UL}, {256L, 3UL}, {192L, 12345UL}}) {
      GramForm other = canonical_gram(a, cfg(p, s));
      for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) {
          Real diff = Real(base(i, j).to_string(), 256) - Real(other(i, j).to_string(), 256);
          CHECK(abs(diff) <= Real(other.tau().to_string(), 256) + Real(base.tau().to_string(), 256));
        }
    }
  }
}

TEST_CASE("non-reduced orders have no canonical Gram") {
  try {
    compute_embeddings(monogenic_order({0, 0, 1}), 192, 1);
    FAIL("expected NotReduced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotReduced);
  }
}

TEST_CASE("characteristic polynomial agrees with determinant evaluation") {
  Order t = example_order("zeta3cbrt2");
  IntMatrix m = regular_matrix(t, make_int_vector({1, 2, 0, -1, 0, 1}));
  IntVector chi = characteristic_polynomial(m);
  REQUIRE(chi.size() == 7);
  CHECK(chi[6] == 1);
  for (long x = -3; x <= 3; ++x) {
    oracle::Mat tm;
    for (std::size_t r = 0; r < 6; ++r) {
      oracle::Vec row;
      for (std::size_t c = 0; c < 6; ++c) row.push_back((r == c ? mpz_class(x) : mpz_class(0)) - m(r, c));
      tm.push_back(row);
    }
    mpz_class value = 0;
    for (std::size_t i = chi.size(); i-- > 0;) value = value * x + chi[i];
    CHECK(value == oracle::det(tm));
  }
}

TEST_CASE("GramForm validation and tolerance classes") {
  RunConfig c = cfg(128);
  CHECK_THROWS_AS(GramForm::from_decimal(2, {{"1", "0.5"}, {"0.4", "1"}}, c), Error);
  CHECK_THROWS_AS(GramForm::from_decimal(2, {{"1", "2"}, {"2", "1"}}, c), Error);
  CHECK_THROWS_AS(GramForm::from_decimal(1, {{"abc"}}, c), Error);
  GramForm g = GramForm::from_decimal(2, {{"2", "1"}, {"1", "2"}}, c);
  // tau = 2^(-128/3) * 2 ~ 3.6e-13; the ambiguity band ends 2^16 tau higher.
  CHECK(g.classify_zero(Real("1e-14", 128)) == ZeroVerdict::Zero);
  CHECK(g.classify_zero(Real("1e-10", 128)) == ZeroVerdict::Ambiguous);
  CHECK(g.classify_zero(Real("1e-6", 128)) == ZeroVerdict::Nonzero);
  CHECK(g.classify_sign(Real("-1e-14", 128)) == SignVerdict::Nonnegative);
  CHECK(g.classify_sign(Real("-1e-10", 128)) == SignVerdict::Ambiguous);
  CHECK(g.classify_sign(Real("-1e-6", 128)) == SignVerdict::Negative);
  CHECK_THROWS_AS(g.is_zero(Real("1e-10", 128)), Error);
}
