#pragma once

// Complex embeddings of a reduced order and the canonical inner product
// <x, y> = sum over embeddings s of s(x) * conj(s(y)).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gradus/config.hpp"
#include "gradus/order.hpp"
#include "gradus/real.hpp"

namespace gradus {

struct EmbeddingMatrix {
  std::size_t n = 0;
  // sigma[k][i] = sigma_k(e_i); rows sorted lexicographically by (re, im).
  std::vector<std::vector<Complex>> sigma;
  long precision = 0;
  Real residual;  // max ring-homomorphism defect over all rows
};

// One attempt at a fixed precision. Throws NotReduced, DegenerateSplitting
// (no separating element within the retry budget) or NumericAmbiguity
// (residual too large for the precision).
EmbeddingMatrix compute_embeddings(const Order& a, long precision, std::uint64_t seed);

// Escalating variant; throws PrecisionExhausted after the budget.
EmbeddingMatrix compute_embeddings(const Order& a, const RunConfig& config);

enum class ZeroVerdict { Zero, Nonzero, Ambiguous };
enum class SignVerdict { Nonnegative, Negative, Ambiguous };

class GramForm {
 public:
  GramForm() = default;

  // entries is row-major n x n. Checks symmetry and positive definiteness
  // and derives the zero tolerance from the configuration.
  static GramForm from_entries(std::size_t n, std::vector<Real> entries, const RunConfig& config);
  static GramForm from_decimal(std::size_t n, const std::vector<std::vector<std::string>>& entries,
                               const RunConfig& config);

  std::size_t n() const { return n_; }
  long precision() const { return precision_; }
  const Real& operator()(std::size_t i, std::size_t j) const { return g_[i * n_ + j]; }
  const Real& tau() const { return tau_; }
  const Real& band_top() const { return band_top_; }
  // Double-precision copy for screening kernels.
  std::span<const double> approx() const { return approx_; }
  double max_abs() const { return max_abs_; }

  Real inner(std::span<const mpz_class> x, std::span<const mpz_class> y) const;
  Real norm(std::span<const mpz_class> x) const { return inner(x, x); }
  // G * y, for repeated inner products against y.
  std::vector<Real> apply(std::span<const mpz_class> y) const;

  // |value| <= tau is zero, |value| > 2^bits * tau is nonzero, anything in
  // between is ambiguous.
  ZeroVerdict classify_zero(const Real& value) const;
  // value >= -tau is nonnegative; the band below -tau is ambiguous.
  SignVerdict classify_sign(const Real& value) const;

  // Throw NumericAmbiguity on an ambiguous verdict.
  bool is_zero(const Real& value) const;
  bool is_nonnegative(const Real& value) const;

 private:
  std::size_t n_ = 0;
  long precision_ = 0;
  std::vector<Real> g_;
  std::vector<double> approx_;
  double max_abs_ = 0;
  Real tau_;
  Real band_top_;
};

GramForm gram(const EmbeddingMatrix& e, const RunConfig& config);

// Embeddings and Gram form in one escalating call.
GramForm canonical_gram(const Order& a, const RunConfig& config);

// Exact characteristic polynomial det(tI - M), constant term first.
IntVector characteristic_polynomial(const IntMatrix& m);

}  // namespace gradus
