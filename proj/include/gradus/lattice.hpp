#pragma once

// Decompositions and indecomposable vectors of a lattice (Z^n, G), and its
// universal orthogonal decomposition.
//
// A decomposition of z is a pair (x, y) with z = x + y and <x, y> >= 0;
// z != 0 is indecomposable when only the trivial pairs (z, 0), (0, z) exist.
// Every vector is a sum of indecomposables of no larger norm, and grouping
// the indecomposables by the connected components of their non-orthogonality
// graph yields the finest orthogonal splitting of the lattice, which every
// other orthogonal splitting coarsens in a unique way.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gradus/embeddings.hpp"
#include "gradus/intlinalg.hpp"

namespace gradus {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

struct SDecomposition {
  std::size_t ambient_rank = 0;
  // Components sorted by their lexicographically smallest HNF basis vector.
  std::vector<SublatticeBasis> components;
};

// Rows of the returned matrix form an LLL-reduced basis of Z^n under G.
IntMatrix lll_reduce(const GramForm& g, double delta = 0.99);

// z == x + y exactly and <x, y> >= -tau. Throws AmbiguousSign inside the
// ambiguity band below zero.
bool is_decomposition(const GramForm& g, std::span<const mpz_class> z, std::span<const mpz_class> x,
                      std::span<const mpz_class> y);

// All v != 0 with <v, v> <= bound + tau, one per +-pair (first nonzero
// coordinate positive), sorted lexicographically.
std::vector<IntVector> enumerate_up_to(const GramForm& g, const Real& bound,
                                       std::size_t cap = kDefaultEnumerationCap);
std::vector<IntVector> enumerate_up_to(const GramForm& g, long bound,
                                       std::size_t cap = kDefaultEnumerationCap);

bool is_indecomposable(const GramForm& g, std::span<const mpz_class> v,
                       std::size_t cap = kDefaultEnumerationCap);

SDecomposition universal_s_decomposition(const GramForm& g, std::size_t cap = kDefaultEnumerationCap);

// Invariants of an S-decomposition: nonzero components, pairwise orthogonal
// within tau, and summing directly to Z^n. Returns a description of the
// first violation, or nothing.
std::optional<std::string> check_s_decomposition(const GramForm& g, const SDecomposition& d);

// For a coarser decomposition (M_t), the map f with M_t = sum of L_s over
// f^{-1}(t), found by containment. Nothing if no such map exists.
std::optional<std::vector<std::size_t>> coarsening_map(const SDecomposition& fine,
                                                       std::span<const SublatticeBasis> coarse);

}  // namespace gradus
