#pragma once

// Finite abelian groups in invariant-factor form and their homomorphisms.

#include <cstddef>
#include <vector>

#include "gradus/intlinalg.hpp"

namespace gradus {

// Coordinates modulo the invariant factors; the identity is all zeros.
using GroupElement = std::vector<long>;

class FinAbGroup {
 public:
  FinAbGroup() = default;  // trivial group
  // Factors equal to 1 are dropped; the rest must satisfy d1 | d2 | ...
  explicit FinAbGroup(std::vector<long> invariant_factors);

  const std::vector<long>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  long order() const;
  bool is_cyclic() const { return factors_.size() <= 1; }

  GroupElement zero() const { return GroupElement(factors_.size(), 0); }
  GroupElement generator(std::size_t i) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, const mpz_class& k) const;
  bool contains(const GroupElement& a) const;
  long element_order(const GroupElement& a) const;
  // All elements in lexicographic order.
  std::vector<GroupElement> elements() const;
  // Subgroup generated by the given elements, as a sorted element list.
  std::vector<GroupElement> generated_subgroup(const std::vector<GroupElement>& gens) const;

  bool operator==(const FinAbGroup& other) const = default;

 private:
  std::vector<long> factors_;
};

struct GroupHom {
  FinAbGroup source;
  FinAbGroup target;
  // Images of the standard generators of the source.
  std::vector<GroupElement> images;

  GroupElement apply(const GroupElement& x) const;
  // Every relation d_i * g_i = 0 of the source maps to zero.
  bool well_defined() const;
  bool is_isomorphism() const;

  bool operator==(const GroupHom& other) const = default;
};

GroupHom identity_hom(const FinAbGroup& g);
GroupHom trivial_hom(const FinAbGroup& source, const FinAbGroup& target);

struct Presentation {
  FinAbGroup group;
  // Image of each abstract generator s_j.
  std::vector<GroupElement> generator_images;
  // lifts[i] in Z^{num_gens} maps to the i-th standard generator of group.
  std::vector<IntVector> generator_lifts;
};

// Z^{num_gens} modulo the row span of the relations, via Smith normal form.
// Throws InfiniteGroup when the quotient is infinite.
Presentation group_from_relations(std::size_t num_gens, const std::vector<IntVector>& relations);

}  // namespace gradus
