#pragma once

// Idempotents, connectedness and roots of unity of reduced orders, found by
// short-vector enumeration under the canonical form and exact filtering.
//
// An idempotent e has <e, e> = #{s : s(e) = 1} <= rank, and a root of unity
// z has |s(z)| = 1 for every embedding, hence <z, z> = rank exactly.

#include <optional>
#include <vector>

#include "gradus/config.hpp"
#include "gradus/embeddings.hpp"
#include "gradus/order.hpp"

namespace gradus {

// All x with x*x == x, sorted lexicographically; always contains 0 and 1.
std::vector<Element> idempotents(const Order& a, const RunConfig& config);
std::vector<Element> idempotents(const Order& a, const GramForm& g, std::size_t cap);

// Decided both by counting idempotents and by indecomposability of 1;
// throws InternalInconsistency if the two disagree.
bool is_connected(const Order& a, const RunConfig& config);
bool is_connected(const Order& a, const GramForm& g, std::size_t cap);

// Largest m with phi(m) <= rank.
long largest_phi_preimage(std::size_t rank);
// Iteration bound used for multiplicative orders: 2 * largest_phi_preimage^2.
long torsion_order_bound(std::size_t rank);

// Least n with x^n == 1, or nothing past torsion_order_bound(rank).
std::optional<long> element_order(const Order& a, const Element& x);

struct UnitGroupReport {
  std::vector<Element> roots;  // sorted lexicographically
  std::vector<long> orders;    // orders[k] is the order of roots[k]
  std::size_t count = 0;
  bool closed = false;         // closed under products and inverses
};

UnitGroupReport roots_of_unity(const Order& a, const RunConfig& config);
UnitGroupReport roots_of_unity(const Order& a, const GramForm& g, std::size_t cap);

}  // namespace gradus
