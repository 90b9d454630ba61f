#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "gradus/errors.hpp"
#include "gradus/lattice.hpp"
#include "oracles.hpp"

using namespace gradus;

namespace {

RunConfig cfg() { return RunConfig{}; }

GramForm integer_gram(const std::vector<std::vector<long>>& m) {
  std::vector<std::vector<std::string>> s;
  for (const auto& row : m) {
    s.emplace_back();
    for (long x : row) s.back().push_back(std::to_string(x));
  }
  return GramForm::from_decimal(m.size(), s, cfg());
}

std::vector<double> flat(const std::vector<std::vector<long>>& m) {
  std::vector<double> out;
  for (const auto& row : m)
    for (long x : row) out.push_back(static_cast<double>(x));
  return out;
}

// Random positive definite integer Gram B * B^T, B lower triangular with
// diagonal entries 1 or 2.
std::vector<std::vector<long>> random_gram(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-1, 1);
  std::vector<std::vector<long>> b(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) b[i][j] = (i == j ? 1 + (d(rng) + 1) % 2 : d(rng));
  std::vector<std::vector<long>> g(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) g[i][j] += b[i][k] * b[j][k];
  return g;
}

std::vector<long> as_long(const IntVector& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

bool sign_normal(const std::vector<long>& x) {
  for (long c : x)
    if (c) return c > 0;
  return false;
}

// Coordinates of a vector of norm <= bound satisfy x_i^2 <= bound * (G^-1)_ii.
long box_radius(std::vector<double> g, std::size_t n, double bound) {
  std::vector<double> inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    const double p = g[c * n + c];
    for (std::size_t j = 0; j < n; ++j) g[c * n + j] /= p, inv[c * n + j] /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = g[r * n + c];
      for (std::size_t j = 0; j < n; ++j) g[r * n + j] -= f * g[c * n + j], inv[r * n + j] -= f * inv[c * n + j];
    }
  }
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, inv[i * n + i]);
  return static_cast<long>(std::floor(std::sqrt(bound * worst) + 1e-9));
}

std::set<std::vector<long>> box_oracle(const std::vector<double>& g, std::size_t n, double bound, long r) {
  std::set<std::vector<long>> out;
  oracle::box(n, r, [&](const std::vector<long>& x) {
    if (sign_normal(x) && oracle::quad(g, x) <= bound + 1e-9) out.insert(x);
  });
  return out;
}

bool decomposable_oracle(const std::vector<double>& g, const std::vector<long>& v, long r) {
  bool found = false;
  oracle::box(v.size(), r, [&](const std::vector<long>& x) {
    if (found || std::all_of(x.begin(), x.end(), [](long c) { return c == 0; }) || x == v) return;
    std::vector<long> y(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) y[i] = v[i] - x[i];
    if (oracle::bilinear(g, x, y) >= 0) found = true;
  });
  return found;
}

IntVector iv(std::initializer_list<long> x) { return make_int_vector(x); }

}  // namespace

TEST_CASE("is_decomposition examples") {
  GramForm g = integer_gram({{1, 0}, {0, 1}});
  CHECK(is_decomposition(g, iv({1, 1}), iv({1, 0}), iv({0, 1})));
  CHECK_FALSE(is_decomposition(g, iv({1, 0}), iv({2, 0}), iv({-1, 0})));
  CHECK(is_decomposition(g, iv({1, 0}), iv({1, 0}), iv({0, 0})));
  CHECK_FALSE(is_decomposition(g, iv({1, 0}), iv({1, 1}), iv({0, 0})));
}

TEST_CASE("enumeration examples") {
  GramForm g = integer_gram({{1, 0}, {0, 1}});
  CHECK(enumerate_up_to(g, 1L) == std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
  CHECK(enumerate_up_to(g, 2L) == std::vector<IntVector>{iv({0, 1}), iv({1, -1}), iv({1, 0}), iv({1, 1})});
  GramForm c2 = integer_gram({{2, 0}, {0, 2}});
  CHECK(enumerate_up_to(c2, 2L) == std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
  CHECK(enumerate_up_to(g, 0L).empty());
}

TEST_CASE("enumeration matches brute force on random Grams") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto m = random_gram(rng, n);
    GramForm g = integer_gram(m);
    const long bound = 4 + trial % 5;
    std::set<std::vector<long>> got;
    for (const auto& v : enumerate_up_to(g, bound)) got.insert(as_long(v));
    CHECK(got == box_oracle(flat(m), n, static_cast<double>(bound), box_radius(flat(m), n, bound)));
  }
}

TEST_CASE("enumeration respects the budget") {
  GramForm g = integer_gram({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  try {
    enumerate_up_to(g, 50L, 10);
    FAIL("expected EnumerationBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EnumerationBudgetExceeded);
  }
}

TEST_CASE("indecomposability examples") {
  GramForm g = integer_gram({{1, 0}, {0, 1}});
  CHECK(is_indecomposable(g, iv({1, 0})));
  CHECK(is_indecomposable(g, iv({0, -1})));
  CHECK_FALSE(is_indecomposable(g, iv({1, 1})));
  GramForm a2 = integer_gram({{2, 1}, {1, 2}});
  CHECK_FALSE(is_indecomposable(a2, iv({1, 1})));
  CHECK(is_indecomposable(a2, iv({1, -1})));
}

TEST_CASE("indecomposability matches brute force") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    auto m = random_gram(rng, n);
    GramForm g = integer_gram(m);
    for (const auto& v : enumerate_up_to(g, 5L)) {
      auto x = as_long(v);
      const long r = box_radius(flat(m), n, oracle::quad(flat(m), x));
      CHECK(is_indecomposable(g, v) == !decomposable_oracle(flat(m), x, r));
    }
  }
}

TEST_CASE("LLL returns a reduced unimodular basis") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    auto m = random_gram(rng, n);
    GramForm g = integer_gram(m);
    IntMatrix b = lll_reduce(g);
    CHECK(abs_det(b) == 1);
    // Gram-Schmidt in double on the reduced basis.
    std::vector<std::vector<double>> gram(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gram[i][j] = oracle::bilinear(flat(m), as_long(b.row_vector(i)), as_long(b.row_vector(j)));
    std::vector<std::vector<double>> mu(n, std::vector<double>(n));
    std::vector<double> bstar(n);
    for (std::size_t i = 0; i < n; ++i) {
      bstar[i] = gram[i][i];
      for (std::size_t j = 0; j < i; ++j) {
        double s = gram[i][j];
        for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * bstar[k];
        mu[i][j] = s / bstar[j];
        bstar[i] -= mu[i][j] * mu[i][j] * bstar[j];
      }
    }
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) CHECK(std::abs(mu[i][j]) <= 0.5 + 1e-9);
      CHECK(bstar[i] >= (0.99 - mu[i][i - 1] * mu[i][i - 1]) * bstar[i - 1] - 1e-9);
    }
  }
}

TEST_CASE("universal S-decomposition examples") {
  auto i3 = universal_s_decomposition(integer_gram({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  REQUIRE(i3.components.size() == 3);
  CHECK(i3.components[0] == SublatticeBasis::span(3, std::vector<IntVector>{iv({0, 0, 1})}));
  CHECK(i3.components[2] == SublatticeBasis::span(3, std::vector<IntVector>{iv({1, 0, 0})}));
  auto a2 = universal_s_decomposition(integer_gram({{2, 1}, {1, 2}}));
  REQUIRE(a2.components.size() == 1);
  CHECK(a2.components[0] == SublatticeBasis::full(2));
  auto c2 = universal_s_decomposition(integer_gram({{2, 0}, {0, 2}}));
  CHECK(c2.components.size() == 2);
}

TEST_CASE("S-decomposition follows a change of basis") {
  // A2 (+) Z (+) Z written in a skewed basis: components are the images of
  // the blocks.
  std::mt19937_64 rng(31);
  std::vector<std::vector<long>> block = {{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 3}};
  for (int trial = 0; trial < 10; ++trial) {
    IntMatrix u = IntMatrix::identity(4);
    std::uniform_int_distribution<long> k(-2, 2);
    for (std::size_t s = 0; s < 6; ++s) u.add_row_multiple(s % 4, (s + 1 + trial % 3) % 4, k(rng));
    REQUIRE(abs_det(u) == 1);
    // G' = U G U^T; new basis vector i is row i of U in block coordinates.
    std::vector<std::vector<long>> g2(4, std::vector<long>(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        g2[i][j] = static_cast<long>(oracle::bilinear(flat(block), as_long(u.row_vector(i)), as_long(u.row_vector(j))));
    auto d = universal_s_decomposition(integer_gram(g2));
    CHECK(d.components.size() == 3);
    std::multiset<std::size_t> ranks;
    for (const auto& c : d.components) ranks.insert(c.rank());
    CHECK(ranks == std::multiset<std::size_t>{1, 1, 2});
    CHECK_FALSE(check_s_decomposition(integer_gram(g2), d).has_value());
  }
}

TEST_CASE("check_s_decomposition and coarsening_map") {
  GramForm g = integer_gram({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto fine = universal_s_decomposition(g);
  SDecomposition bad{3, {SublatticeBasis::span(3, std::vector<IntVector>{iv({1, 1, 0})}),
                         SublatticeBasis::span(3, std::vector<IntVector>{iv({0, 1, 0})}),
                         SublatticeBasis::span(3, std::vector<IntVector>{iv({0, 0, 1})})}};
  CHECK(check_s_decomposition(g, bad).has_value());
  std::vector<SublatticeBasis> coarse{SublatticeBasis::span(3, std::vector<IntVector>{iv({1, 0, 0}), iv({0, 0, 1})}),
                                      SublatticeBasis::span(3, std::vector<IntVector>{iv({0, 1, 0})})};
  auto f = coarsening_map(fine, coarse);
  REQUIRE(f.has_value());
  CHECK(*f == std::vector<std::size_t>{0, 1, 0});
  std::vector<SublatticeBasis> wrong{SublatticeBasis::span(3, std::vector<IntVector>{iv({1, 1, 0}), iv({0, 0, 1})}),
                                     SublatticeBasis::span(3, std::vector<IntVector>{iv({0, 1, 0})})};
  CHECK_FALSE(coarsening_map(fine, wrong).has_value());
}
