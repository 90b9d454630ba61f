#pragma once

// Commutative orders given by integer structure constants on a Z-basis.

#include <cstddef>
#include <string>
#include <vector>

#include "gradus/intlinalg.hpp"

namespace gradus {

// Coordinates of an order element relative to the order's basis.
using Element = IntVector;

// table[i][j] holds the coordinates of e_i * e_j.
using StructureConstants = std::vector<std::vector<IntVector>>;

class Order {
 public:
  Order() = default;

  std::size_t rank() const { return rank_; }
  const StructureConstants& table() const { return table_; }
  const IntVector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const Element& one() const { return one_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Element zero() const { return zero_vector(rank_); }
  Element basis_element(std::size_t i) const;

  bool operator==(const Order& other) const = default;

 private:
  friend Order validate(StructureConstants table, Element one, std::size_t n,
                        std::vector<std::string> labels);
  std::size_t rank_ = 0;
  StructureConstants table_;
  Element one_;
  std::vector<std::string> labels_;
};

// Checks commutativity, then the identity, then associativity, and reports
// the first violation with its basis indices.
Order validate(StructureConstants table, Element one, std::size_t n,
               std::vector<std::string> labels = {});

Element mul(const Order& a, const Element& x, const Element& y);
Element power(const Order& a, const Element& x, unsigned long k);

// Matrix of y -> x*y acting on coordinate columns.
IntMatrix regular_matrix(const Order& a, const Element& x);

// Gram matrix of the rational trace form Tr(M_{e_i e_j}).
IntMatrix trace_form(const Order& a);

SublatticeBasis nilradical(const Order& a);
bool is_reduced(const Order& a);

struct GroupRing {
  Order order;
  // elements[k] is the group element (mod cyclic_factors) of basis vector k.
  std::vector<std::vector<long>> elements;
  std::vector<long> cyclic_factors;
};

// Z[C_{d1} x ... x C_{dk}] with the group elements as basis.
GroupRing group_ring(const std::vector<long>& cyclic_factors);

struct QuotientOrder {
  Order order;
  IntMatrix projection;  // n x m; image of x is x * projection
  IntMatrix lifts;       // m x n; row k lifts the k-th quotient basis vector
  SublatticeBasis ideal;
};

// A / I for the ideal generated by ideal_gens. Throws TorsionQuotient when
// the ideal is not saturated.
QuotientOrder quotient_order(const Order& a, const std::vector<Element>& ideal_gens);

// Z[X]/(f) with the power basis. coefficients run from the constant term up
// to the leading coefficient, which must be 1.
Order monogenic_order(const std::vector<long>& coefficients);

Order product_order(const Order& a, const Order& b);
Order zero_order();

// A subring given by a sublattice that contains 1 and is closed under
// multiplication, expressed in the sublattice's HNF basis.
Order suborder(const Order& a, const SublatticeBasis& sub);

// Tensor product over Z with basis e_i (x) f_j at index i * rank(b) + j.
Order tensor_order(const Order& a, const Order& b);

}  // namespace gradus
