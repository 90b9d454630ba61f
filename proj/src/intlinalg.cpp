#include "gradus/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gradus/errors.hpp"

namespace gradus {

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

IntVector zero_vector(std::size_t n) { return IntVector(n, mpz_class(0)); }

bool is_zero(std::span<const mpz_class> v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

std::string to_string(std::span<const mpz_class> v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i].get_str();
  }
  out << ')';
  return out.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

IntVector IntMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return IntVector(s.begin(), s.end());
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::rows_range(std::size_t begin, std::size_t end) const {
  IntMatrix out(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    std::copy(row(r).begin(), row(r).end(), out.row(r - begin).begin());
  return out;
}

void IntMatrix::append_row(std::span<const mpz_class> v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (auto& x : row(r)) x = -x;
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntVector mul(std::span<const mpz_class> v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::InvalidArgument, "vector/matrix mismatch");
  IntVector out = zero_vector(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

IntVector mul(const IntMatrix& m, std::span<const mpz_class> v) {
  if (v.size() != m.cols()) throw Error(ErrorCode::InvalidArgument, "matrix/vector mismatch");
  IntVector out = zero_vector(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

mpz_class dot(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out << ',';
    out << to_string(m.row(r));
  }
  out << ']';
  return out.str();
}

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    // Euclid on column c below row r until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (best == rows || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        mpz_class q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = s.rows();
  const std::size_t cols = s.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Pivot on the smallest nonzero entry of the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          if (pr == rows || abs(s(i, j)) < abs(s(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) break;
      s.swap_rows(t, pr);
      u.swap_rows(t, pr);
      s.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        mpz_class q = floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        mpz_class q = floor_div(s(t, j), s(t, t));
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      s.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

std::size_t rank(const IntMatrix& m) {
  HnfResult r = hnf(m);
  std::size_t k = 0;
  while (k < r.h.rows() && !is_zero(r.h.row(k))) ++k;
  return k;
}

mpz_class abs_det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  HnfResult r = hnf(m);
  mpz_class d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) d *= r.h(i, i);
  return abs(d);
}

SublatticeBasis::SublatticeBasis(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank), basis_(0, ambient_rank) {}

SublatticeBasis SublatticeBasis::span(std::size_t ambient_rank, const IntMatrix& generators) {
  SublatticeBasis out(ambient_rank);
  if (generators.rows() == 0) return out;
  if (generators.cols() != ambient_rank)
    throw Error(ErrorCode::InvalidArgument, "generator length does not match ambient rank");
  HnfResult r = hnf(generators);
  std::size_t k = 0;
  while (k < r.h.rows() && !is_zero(r.h.row(k))) ++k;
  out.basis_ = r.h.rows_range(0, k);
  if (k == 0) out.basis_ = IntMatrix(0, ambient_rank);
  return out;
}

SublatticeBasis SublatticeBasis::span(std::size_t ambient_rank,
                                      const std::vector<IntVector>& generators) {
  if (generators.empty()) return SublatticeBasis(ambient_rank);
  return span(ambient_rank, IntMatrix::from_rows(generators, ambient_rank));
}

SublatticeBasis SublatticeBasis::full(std::size_t ambient_rank) {
  return span(ambient_rank, IntMatrix::identity(ambient_rank));
}

std::optional<IntVector> SublatticeBasis::coordinates(std::span<const mpz_class> v) const {
  if (v.size() != ambient_rank_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  IntVector rest(v.begin(), v.end());
  IntVector coords = zero_vector(rank());
  std::size_t col = 0;
  for (std::size_t r = 0; r < rank(); ++r) {
    auto row = basis_.row(r);
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    for (; col < pivot; ++col)
      if (rest[col] != 0) return std::nullopt;
    if (rest[pivot] % row[pivot] != 0) return std::nullopt;
    mpz_class q = rest[pivot] / row[pivot];
    coords[r] = q;
    for (std::size_t c = pivot; c < ambient_rank_; ++c) rest[c] -= q * row[c];
    col = pivot + 1;
  }
  if (!gradus::is_zero(rest)) return std::nullopt;
  return coords;
}

bool SublatticeBasis::contains(std::span<const mpz_class> v) const {
  return coordinates(v).has_value();
}

bool SublatticeBasis::contains(const SublatticeBasis& other) const {
  for (std::size_t r = 0; r < other.rank(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

SublatticeBasis SublatticeBasis::operator+(const SublatticeBasis& other) const {
  if (other.ambient_rank_ != ambient_rank_)
    throw Error(ErrorCode::InvalidArgument, "ambient rank mismatch");
  IntMatrix stacked = basis_;
  for (std::size_t r = 0; r < other.rank(); ++r) stacked.append_row(other.basis_.row(r));
  if (stacked.rows() == 0) return SublatticeBasis(ambient_rank_);
  return span(ambient_rank_, stacked);
}

mpz_class SublatticeBasis::saturation_index() const {
  if (empty()) return 1;
  // Product of the SNF diagonal of a full-row-rank basis.
  SnfResult r = snf(basis_);
  mpz_class d = 1;
  for (std::size_t i = 0; i < rank(); ++i) d *= r.s(i, i);
  return d;
}

SublatticeBasis kernel_saturated(const IntMatrix& m) {
  HnfResult r = hnf(m);
  std::vector<IntVector> kernel;
  for (std::size_t i = 0; i < r.h.rows(); ++i)
    if (is_zero(r.h.row(i))) kernel.push_back(r.u.row_vector(i));
  return SublatticeBasis::span(m.rows(), kernel);
}

SublatticeBasis saturate(const SublatticeBasis& lattice) {
  const std::size_t n = lattice.ambient_rank();
  if (lattice.empty()) return lattice;
  // Vectors orthogonal (standard dot product) to the lattice, then their
  // annihilator.
  SublatticeBasis orth = kernel_saturated(lattice.basis().transpose());
  if (orth.empty()) return SublatticeBasis::full(n);
  return kernel_saturated(orth.basis().transpose());
}

IntMatrix stack(std::span<const SublatticeBasis> parts) {
  std::size_t cols = parts.empty() ? 0 : parts.front().ambient_rank();
  IntMatrix out(0, cols);
  for (const auto& p : parts)
    for (std::size_t r = 0; r < p.rank(); ++r) out.append_row(p.basis().row(r));
  return out;
}

mpz_class direct_sum_index(std::span<const SublatticeBasis> parts, std::size_t ambient_rank) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.ambient_rank() != ambient_rank)
      throw Error(ErrorCode::InvalidArgument, "part has wrong ambient rank");
    total += p.rank();
  }
  if (total != ambient_rank)
    throw Error(ErrorCode::InfiniteIndex, "ranks of parts sum to " + std::to_string(total) +
                                              ", ambient rank is " + std::to_string(ambient_rank));
  if (ambient_rank == 0) return 1;
  mpz_class d = abs_det(stack(parts));
  if (d == 0) throw Error(ErrorCode::InfiniteIndex, "sum of parts is not of full rank");
  return d;
}

std::optional<IntVector> solve_left(const IntMatrix& w, std::span<const mpz_class> v) {
  if (v.size() != w.cols()) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  HnfResult r = hnf(w);
  std::size_t k = 0;
  while (k < r.h.rows() && !is_zero(r.h.row(k))) ++k;
  SublatticeBasis lattice = SublatticeBasis::span(w.cols(), r.h.rows_range(0, k));
  auto coords = lattice.coordinates(v);
  if (!coords) return std::nullopt;
  // c * W = v with c = coords * U[0:k]
  IntVector c = zero_vector(w.rows());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < w.rows(); ++j) c[j] += (*coords)[i] * r.u(i, j);
  return c;
}

}  // namespace gradus
