#pragma once

// Exact integer linear algebra on arbitrary-precision matrices.
//
// Vectors are row vectors throughout: a lattice is the row span of a matrix,
// and a left kernel of M is {v : v * M = 0}.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gradus {

using IntVector = std::vector<mpz_class>;

IntVector make_int_vector(std::initializer_list<long> values);
IntVector zero_vector(std::size_t n);
bool is_zero(std::span<const mpz_class> v);
std::string to_string(std::span<const mpz_class> v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<mpz_class> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const mpz_class> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  IntVector row_vector(std::size_t r) const;
  std::vector<IntVector> row_vectors() const;

  IntMatrix transpose() const;
  IntMatrix rows_range(std::size_t begin, std::size_t end) const;
  void append_row(std::span<const mpz_class> v);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

// v * M for a row vector v.
IntVector mul(std::span<const mpz_class> v, const IntMatrix& m);
// M * v for a column vector v.
IntVector mul(const IntMatrix& m, std::span<const mpz_class> v);
mpz_class dot(std::span<const mpz_class> a, std::span<const mpz_class> b);

std::string to_string(const IntMatrix& m);

struct HnfResult {
  IntMatrix h;  // H = U * M
  IntMatrix u;  // unimodular
};

// Row-style Hermite normal form. Nonzero rows come first, pivots are
// positive with strictly increasing columns, and entries above a pivot lie
// in [0, pivot).
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
  IntMatrix s;  // S = U * M * V, diagonal
  IntMatrix u;
  IntMatrix v;
};

// Smith normal form with a nonnegative diagonal d1 | d2 | ...
SnfResult snf(const IntMatrix& m);

// |det| of a square matrix; zero when singular.
mpz_class abs_det(const IntMatrix& m);

// Row rank over Q.
std::size_t rank(const IntMatrix& m);

// A sublattice of Z^n, stored as an HNF basis without zero rows.
class SublatticeBasis {
 public:
  SublatticeBasis() = default;
  explicit SublatticeBasis(std::size_t ambient_rank);

  // HNF of the row span of the given generators.
  static SublatticeBasis span(std::size_t ambient_rank, const IntMatrix& generators);
  static SublatticeBasis span(std::size_t ambient_rank, const std::vector<IntVector>& generators);
  static SublatticeBasis full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.rows(); }
  bool empty() const { return basis_.rows() == 0; }
  const IntMatrix& basis() const { return basis_; }

  // Coordinates c with c * basis = v, if v lies in the lattice.
  std::optional<IntVector> coordinates(std::span<const mpz_class> v) const;
  bool contains(std::span<const mpz_class> v) const;
  bool contains(const SublatticeBasis& other) const;

  SublatticeBasis operator+(const SublatticeBasis& other) const;
  bool operator==(const SublatticeBasis& other) const = default;

  // Index of this lattice in its saturation (Q-span intersected with Z^n).
  mpz_class saturation_index() const;

 private:
  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;
};

// {v integer : v * M = 0}. The result is saturated.
SublatticeBasis kernel_saturated(const IntMatrix& m);

// Q-span of the lattice intersected with Z^n.
SublatticeBasis saturate(const SublatticeBasis& lattice);

// Index of the sum of the parts in Z^n. Throws InfiniteIndex when the ranks
// do not add up to the ambient rank or the sum is not of full rank. The parts
// form an internal direct sum decomposition of Z^n iff the result is 1.
mpz_class direct_sum_index(std::span<const SublatticeBasis> parts, std::size_t ambient_rank);

// Integer solution c of c * W = v, if one exists.
std::optional<IntVector> solve_left(const IntMatrix& w, std::span<const mpz_class> v);

// Stacked bases of the parts, in order, as one matrix.
IntMatrix stack(std::span<const SublatticeBasis> parts);

}  // namespace gradus
