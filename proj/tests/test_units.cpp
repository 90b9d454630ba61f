#include <set>

#include "doctest.h"
#include "gradus/errors.hpp"
#include "gradus/fixtures.hpp"
#include "gradus/lattice.hpp"
#include "gradus/units.hpp"
#include "oracles.hpp"

using namespace gradus;

namespace {

IntVector iv(std::initializer_list<long> x) { return make_int_vector(x); }

IntVector from_long(const std::vector<long>& x) {
  IntVector v;
  for (long c : x) v.push_back(c);
  return v;
}

const RunConfig kConfig;

}  // namespace

TEST_CASE("idempotent examples") {
  CHECK(idempotents(example_order("zxz"), kConfig) ==
        std::vector<Element>{iv({0, 0}), iv({0, 1}), iv({1, 0}), iv({1, 1})});
  CHECK(idempotents(example_order("zc2"), kConfig) == std::vector<Element>{iv({0, 0}), iv({1, 0})});
  Order parity = example_order("parity5");
  CHECK(idempotents(parity, kConfig) == std::vector<Element>{parity.zero(), parity.one()});
  CHECK_THROWS_AS(idempotents(example_order("zeps"), kConfig), Error);
}

TEST_CASE("idempotents contain every idempotent of a coordinate box") {
  for (const char* name : {"zxz", "zc2", "zc3", "zsqrt2", "zc2xc2", "parity5"}) {
    Order a = example_order(name);
    auto found = idempotents(a, kConfig);
    std::set<Element> got(found.begin(), found.end());
    for (const auto& e : found) CHECK(mul(a, e, e) == e);
    oracle::box(a.rank(), 2, [&](const std::vector<long>& x) {
      IntVector v = from_long(x);
      if (mul(a, v, v) == v) CHECK(got.count(v) == 1);
    });
  }
}

TEST_CASE("connectedness") {
  CHECK(is_connected(example_order("z"), kConfig));
  CHECK_FALSE(is_connected(example_order("zxz"), kConfig));
  CHECK(is_connected(example_order("zsqrt2"), kConfig));
  CHECK(is_connected(example_order("parity5"), kConfig));
  CHECK(is_connected(example_order("zc4"), kConfig));
  CHECK_THROWS_AS(is_connected(example_order("zeps"), kConfig), Error);
}

TEST_CASE("phi bound") {
  CHECK(largest_phi_preimage(1) == 2);
  CHECK(largest_phi_preimage(2) == 6);
  CHECK(largest_phi_preimage(4) == 12);
  CHECK(largest_phi_preimage(6) == 18);
  CHECK(torsion_order_bound(2) == 72);
}

TEST_CASE("element orders") {
  Order c4 = example_order("zc4");
  CHECK(element_order(c4, c4.one()) == 1);
  CHECK(element_order(c4, iv({0, 1, 0, 0})) == 4);
  CHECK(element_order(c4, iv({0, -1, 0, 0})) == 4);
  CHECK(element_order(c4, iv({0, 0, -1, 0})) == 2);
  Order z = example_order("z");
  CHECK_FALSE(element_order(z, iv({2})).has_value());
  CHECK(element_order(z, iv({-1})) == 2);
}

TEST_CASE("roots of unity examples") {
  auto c4 = roots_of_unity(example_order("zc4"), kConfig);
  CHECK(c4.count == 8);
  CHECK(c4.closed);
  std::set<Element> expect;
  for (std::size_t k = 0; k < 4; ++k)
    for (long s : {1, -1}) {
      IntVector v = zero_vector(4);
      v[k] = s;
      expect.insert(v);
    }
  CHECK(std::set<Element>(c4.roots.begin(), c4.roots.end()) == expect);
  CHECK(roots_of_unity(example_order("zeta5"), kConfig).count == 10);
  auto z = roots_of_unity(example_order("z"), kConfig);
  CHECK(z.roots == std::vector<Element>{iv({-1}), iv({1})});
  CHECK(roots_of_unity(example_order("zi"), kConfig).count == 4);
  CHECK(roots_of_unity(example_order("zsqrt2"), kConfig).count == 2);
  CHECK(roots_of_unity(example_order("zeta3cbrt2"), kConfig).count == 6);
  CHECK_THROWS_AS(roots_of_unity(example_order("zeps"), kConfig), Error);
}

TEST_CASE("roots of unity contain every torsion element of a coordinate box") {
  for (const char* name : {"zc3", "zi", "zc2xc2", "zeta5"}) {
    Order a = example_order(name);
    auto r = roots_of_unity(a, kConfig);
    std::set<Element> got(r.roots.begin(), r.roots.end());
    for (std::size_t k = 0; k < r.count; ++k) CHECK(element_order(a, r.roots[k]) == r.orders[k]);
    oracle::box(a.rank(), 2, [&](const std::vector<long>& x) {
      IntVector v = from_long(x);
      if (element_order(a, v)) CHECK(got.count(v) == 1);
    });
  }
}

TEST_CASE("norm bound <x,x> >= #{s : s(x) != 0}") {
  for (const char* name : {"zxz", "zc2xc2", "parity5", "zeta5"}) {
    Order a = example_order(name);
    EmbeddingMatrix e = compute_embeddings(a, kConfig);
    GramForm g = gram(e, kConfig);
    for (const auto& x : enumerate_up_to(g, static_cast<long>(a.rank()) + 2)) {
      long nonzero = 0;
      for (const auto& row : e.sigma) {
        Complex s(e.precision);
        for (std::size_t i = 0; i < a.rank(); ++i) {
          s.re.add_mul(x[i], row[i].re);
          s.im.add_mul(x[i], row[i].im);
        }
        if (!g.is_zero(norm2(s))) ++nonzero;
      }
      CHECK(g.is_nonnegative(g.norm(x) - Real(nonzero, g.precision())));
    }
  }
}
