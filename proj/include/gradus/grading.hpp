#pragma once

// Gradings of orders by finite abelian groups: exact verification,
// pushforward along group homomorphisms, homogeneity, and the universal
// grading of a reduced order.

#include <map>
#include <string>
#include <vector>

#include "gradus/abelian.hpp"
#include "gradus/config.hpp"
#include "gradus/lattice.hpp"
#include "gradus/order.hpp"

namespace gradus {

struct Grading {
  FinAbGroup group;
  std::size_t ambient_rank = 0;
  // Nonzero pieces only, keyed by group element; bases in HNF.
  std::map<GroupElement, SublatticeBasis> pieces;

  SublatticeBasis piece(const GroupElement& g) const;
  std::vector<GroupElement> support() const;

  bool operator==(const Grading& other) const = default;
};

struct GradingReport {
  bool ranks_match = true;
  bool closed_under_products = true;  // B_g * B_h inside B_{g+h}
  bool direct_sum = true;             // pieces sum directly to the order
  bool identity_in_neutral = true;    // 1 in B_0
  bool neutral_is_ring = true;        // B_0 * B_0 inside B_0
  std::vector<std::string> failures;

  bool passed() const {
    return ranks_match && closed_under_products && direct_sum && identity_in_neutral && neutral_is_ring;
  }
};

// Exact integer check of the grading axioms; never throws on a bad grading.
GradingReport verify_grading(const Order& a, const Grading& gr);

Grading trivial_grading(const Order& a);

// Pieces summed over the fibers of f.
Grading push_forward(const Grading& gr, const GroupHom& f);

struct GradedOrder {
  Grading grading;
  SDecomposition decomposition;
  // generator_map[s] is the group element of component s.
  std::vector<GroupElement> generator_map;
  // Relations e_{s1} + e_{s2} - e_{s3} of the group presentation.
  std::vector<IntVector> relations;
  std::vector<IntVector> generator_lifts;
  bool universal = true;
  long precision_used = 0;
};

// Throws NotReduced, PrecisionExhausted or EnumerationBudgetExceeded.
GradedOrder universal_grading(const Order& a, const RunConfig& config);

// The unique f with push_forward(u, f) == c. Throws Ambiguous when a piece
// of u lies in no single piece of c, and NoMorphism otherwise.
GroupHom find_morphism(const GradedOrder& u, const Grading& c);

// x = sum of x_g with x_g in B_g; only nonzero parts are returned.
std::map<GroupElement, Element> homogeneous_parts(const Grading& gr, const Element& x);
bool is_homogeneous(const Grading& gr, const Element& x);
bool is_homogeneous_sublattice(const Grading& gr, const SublatticeBasis& h);

struct GroupRing;
// The grading of Z[G] by G with pieces Z*g, group in invariant-factor form.
Grading natural_grading(const GroupRing& ring);

}  // namespace gradus
