#include "gradus/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>

#include "gradus/errors.hpp"

namespace gradus {

namespace {

constexpr int kSplittingRetries = 8;
constexpr long kGuardBits = 64;

IntMatrix add_scalar(IntMatrix m, const mpz_class& c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += c;
  return m;
}

std::vector<std::complex<double>> aberth_double(const IntVector& f) {
  const std::size_t n = f.size() - 1;
  std::vector<double> c(f.size());
  double bound = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    c[i] = f[i].get_d();
    if (i < n) bound = std::max(bound, std::abs(c[i]));
  }
  const double radius = 0.5 * (1.0 + bound);
  std::vector<std::complex<double>> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2 * std::numbers::pi * static_cast<double>(k) / n + 0.4);

  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> p = c[n], dp = 0;
      for (std::size_t i = n; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (p == 0.0) continue;
      std::complex<double> ratio = p / dp;
      std::complex<double> repulsion = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      std::complex<double> step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

bool finite(const Complex& z) { return mpfr_number_p(z.re.get()) && mpfr_number_p(z.im.get()); }

// Simultaneous Aberth iteration at full precision, seeded from doubles.
std::optional<std::vector<Complex>> aberth(const IntVector& f, long prec) {
  const std::size_t n = f.size() - 1;
  std::vector<Complex> c;
  for (const auto& x : f) c.emplace_back(Real(x, prec), Real(prec));
  std::vector<Complex> z;
  for (const auto& approx : aberth_double(f)) {
    Complex w(prec);
    mpfr_set_d(w.re.get(), approx.real(), MPFR_RNDN);
    mpfr_set_d(w.im.get(), approx.imag(), MPFR_RNDN);
    z.push_back(std::move(w));
  }
  const Real stop = Real::pow2(-(prec - 8), prec);
  const Real one(1, prec);
  for (int iter = 0; iter < 400; ++iter) {
    Real worst(prec);
    for (std::size_t k = 0; k < n; ++k) {
      Complex p = c[n];
      Complex dp(prec);
      for (std::size_t i = n; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (p.re.is_zero() && p.im.is_zero()) continue;
      Complex ratio = p / dp;
      Complex repulsion(prec);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion += Complex(one, Real(prec)) / (z[k] - z[j]);
      Complex step = ratio / (Complex(one, Real(prec)) - ratio * repulsion);
      if (!finite(step)) return std::nullopt;
      z[k] -= step;
      worst = max(worst, abs(step) / (one + abs(z[k])));
    }
    if (worst <= stop) return z;
  }
  // Not converged to full precision; the residual check downstream decides.
  return z;
}

// Left eigenvector of m for the eigenvalue lambda, i.e. a null vector of
// m^T - lambda I, by complete-pivot elimination.
std::vector<Complex> left_eigenvector(const IntMatrix& m, const Complex& lambda, long prec) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n, Complex(prec)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j].re = Real(m(j, i), prec);
      if (i == j) a[i][j] -= lambda;
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = j;

  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pi = k, pj = k;
    Real best = norm2(a[k][k]);
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        Real v = norm2(a[i][j]);
        if (v > best) {
          best = std::move(v);
          pi = i;
          pj = j;
        }
      }
    std::swap(a[k], a[pi]);
    if (pj != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][pj]);
      std::swap(perm[k], perm[pj]);
    }
    if (best.is_zero()) continue;
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex factor = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }

  std::vector<Complex> w(n, Complex(prec));
  w[n - 1].re = Real(1, prec);
  for (std::size_t k = n - 1; k-- > 0;) {
    Complex s(prec);
    for (std::size_t j = k + 1; j < n; ++j) s += a[k][j] * w[j];
    w[k] = (a[k][k].re.is_zero() && a[k][k].im.is_zero()) ? Complex(prec) : Complex(prec) - s / a[k][k];
  }
  std::vector<Complex> out(n, Complex(prec));
  for (std::size_t j = 0; j < n; ++j) out[perm[j]] = w[j];
  return out;
}

Real round_to(const Real& x, long prec) {
  Real r(prec);
  mpfr_set(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Complex round_to(const Complex& z, long prec) { return Complex(round_to(z.re, prec), round_to(z.im, prec)); }

}  // namespace

IntVector characteristic_polynomial(const IntMatrix& m) {
  // Faddeev-LeVerrier; all divisions are exact over Z.
  const std::size_t n = m.rows();
  IntVector c(n + 1);
  c[n] = 1;
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = add_scalar(m * mk, c[n - k + 1]);
    IntMatrix amk = m * mk;
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / mpz_class(static_cast<long>(k));
  }
  return c;
}

EmbeddingMatrix compute_embeddings(const Order& a, long precision, std::uint64_t seed) {
  if (!is_reduced(a)) throw Error(ErrorCode::NotReduced, "order is not reduced");
  const std::size_t n = a.rank();
  const long prec = precision + kGuardBits;
  EmbeddingMatrix out;
  out.n = n;
  out.precision = precision;
  out.residual = Real(precision);
  if (n == 0) return out;

  std::mt19937_64 rng(seed);
  const Real separation = Real::pow2(-precision / 4, prec);
  mpz_class table_scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) table_scale = std::max(table_scale, mpz_class(abs(t)));

  for (int attempt = 0; attempt < kSplittingRetries; ++attempt) {
    const long range = 3 + 2 * attempt;
    Element z = zero_vector(n);
    for (auto& x : z) x = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
    IntMatrix mz = regular_matrix(a, z);
    IntVector f = characteristic_polynomial(mz);
    auto roots = aberth(f, prec);
    if (!roots) continue;

    bool separated = true;
    for (std::size_t i = 0; i < n && separated; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(abs((*roots)[i] - (*roots)[j]) > separation)) {
          separated = false;
          break;
        }
    if (!separated) continue;

    std::vector<std::vector<Complex>> rows;
    bool ok = true;
    for (const auto& lambda : *roots) {
      std::vector<Complex> ell = left_eigenvector(mz, lambda, prec);
      Complex s(prec);
      for (std::size_t i = 0; i < n; ++i) s += ell[i] * Complex(Real(a.one()[i], prec), Real(prec));
      if (!(norm2(s) > Real::pow2(-precision / 2, prec))) {
        ok = false;
        break;
      }
      for (auto& x : ell) x /= s;
      rows.push_back(std::move(ell));
    }
    if (!ok) continue;

    // Multiplicativity defect of every row.
    Real residual(prec);
    Real biggest(1, prec);
    for (const auto& row : rows) {
      for (const auto& x : row) biggest = max(biggest, abs(x));
      Complex at_one(prec);
      for (std::size_t i = 0; i < n; ++i) at_one += row[i] * Complex(Real(a.one()[i], prec), Real(prec));
      residual = max(residual, abs(at_one - Complex(Real(1, prec), Real(prec))));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          Complex image(prec);
          const IntVector& e = a.product(i, j);
          for (std::size_t m = 0; m < n; ++m)
            if (e[m] != 0) image += Complex(Real(e[m], prec), Real(prec)) * row[m];
          residual = max(residual, abs(row[i] * row[j] - image));
        }
    }
    Real one(1, prec);
    Real scale = Real(table_scale + 1, prec) * (one + biggest) * (one + biggest);
    if (residual > Real::pow2(-precision / 2, prec) * scale)
      throw Error(ErrorCode::NumericAmbiguity,
                  "embedding residual " + residual.to_string(6) + " too large at " +
                      std::to_string(precision) + " bits");

    const Real eps = Real::pow2(-precision / 2, prec) * (one + biggest);
    auto less = [&](const std::vector<Complex>& x, const std::vector<Complex>& y) {
      for (std::size_t i = 0; i < n; ++i) {
        Real dr = x[i].re - y[i].re;
        if (abs(dr) > eps) return dr.sign() < 0;
        Real di = x[i].im - y[i].im;
        if (abs(di) > eps) return di.sign() < 0;
      }
      return false;
    };
    std::sort(rows.begin(), rows.end(), less);

    out.sigma.clear();
    for (const auto& row : rows) {
      std::vector<Complex> r;
      for (const auto& x : row) r.push_back(round_to(x, precision));
      out.sigma.push_back(std::move(r));
    }
    out.residual = round_to(residual, precision);
    return out;
  }
  throw Error(ErrorCode::DegenerateSplitting,
              "no separating element found in " + std::to_string(kSplittingRetries) + " attempts");
}

EmbeddingMatrix compute_embeddings(const Order& a, const RunConfig& config) {
  return with_escalation(config, [&](const RunConfig& c) { return compute_embeddings(a, c.precision, c.seed); });
}

GramForm GramForm::from_entries(std::size_t n, std::vector<Real> entries, const RunConfig& config) {
  if (entries.size() != n * n) throw Error(ErrorCode::InvalidArgument, "Gram entry count is not n*n");
  const long prec = config.precision;
  GramForm g;
  g.n_ = n;
  g.precision_ = prec;
  g.g_.reserve(n * n);
  for (auto& e : entries) g.g_.push_back(round_to(e, prec));

  Real biggest(prec);
  for (const auto& e : g.g_) biggest = max(biggest, abs(e));
  g.max_abs_ = biggest.to_double();
  g.tau_ = Real::pow2(-prec / config.tolerance_divisor, prec) * biggest;
  g.band_top_ = Real::pow2(config.ambiguity_bits, prec) * g.tau_;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (abs(g.g_[i * n + j] - g.g_[j * n + i]) > g.tau_)
        throw Error(ErrorCode::InvalidArgument, "Gram matrix is not symmetric");
      g.g_[j * n + i] = g.g_[i * n + j];
    }

  // Leading minors via LDL^T pivots.
  std::vector<Real> work = g.g_;
  Real minor(1, prec);
  for (std::size_t k = 0; k < n; ++k) {
    const Real pivot = work[k * n + k];
    minor *= pivot;
    if (!(minor > g.tau_) || !(pivot > Real(prec)))
      throw Error(ErrorCode::InvalidArgument, "Gram matrix is not positive definite");
    for (std::size_t i = k + 1; i < n; ++i) {
      Real f = work[i * n + k] / pivot;
      for (std::size_t j = k; j < n; ++j) work[i * n + j] -= f * work[k * n + j];
    }
  }

  g.approx_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) g.approx_[i] = g.g_[i].to_double();
  return g;
}

GramForm GramForm::from_decimal(std::size_t n, const std::vector<std::vector<std::string>>& entries,
                                const RunConfig& config) {
  if (entries.size() != n) throw Error(ErrorCode::Parse, "Gram matrix must have n rows");
  std::vector<Real> values;
  for (const auto& row : entries) {
    if (row.size() != n) throw Error(ErrorCode::Parse, "Gram matrix must have n columns");
    for (const auto& s : row) values.emplace_back(s, config.precision);
  }
  return from_entries(n, std::move(values), config);
}

Real GramForm::inner(std::span<const mpz_class> x, std::span<const mpz_class> y) const {
  Real s(precision_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    Real row(precision_);
    for (std::size_t j = 0; j < n_; ++j) row.add_mul(y[j], g_[i * n_ + j]);
    s.add_mul(x[i], row);
  }
  return s;
}

std::vector<Real> GramForm::apply(std::span<const mpz_class> y) const {
  std::vector<Real> out(n_, Real(precision_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i].add_mul(y[j], g_[i * n_ + j]);
  return out;
}

ZeroVerdict GramForm::classify_zero(const Real& value) const {
  Real a = abs(value);
  if (a <= tau_) return ZeroVerdict::Zero;
  if (a > band_top_) return ZeroVerdict::Nonzero;
  return ZeroVerdict::Ambiguous;
}

SignVerdict GramForm::classify_sign(const Real& value) const {
  if (value >= -tau_) return SignVerdict::Nonnegative;
  if (value < -band_top_) return SignVerdict::Negative;
  return SignVerdict::Ambiguous;
}

bool GramForm::is_zero(const Real& value) const {
  switch (classify_zero(value)) {
    case ZeroVerdict::Zero:
      return true;
    case ZeroVerdict::Nonzero:
      return false;
    default:
      throw Error(ErrorCode::NumericAmbiguity,
                  "inner product " + value.to_string(8) + " lies in the ambiguity band");
  }
}

bool GramForm::is_nonnegative(const Real& value) const {
  switch (classify_sign(value)) {
    case SignVerdict::Nonnegative:
      return true;
    case SignVerdict::Negative:
      return false;
    default:
      throw Error(ErrorCode::AmbiguousSign, "sign of " + value.to_string(8) + " is ambiguous");
  }
}

GramForm gram(const EmbeddingMatrix& e, const RunConfig& config) {
  const std::size_t n = e.n;
  const long prec = e.precision + kGuardBits;
  std::vector<Real> entries;
  entries.reserve(n * n);
  Real worst_imag(prec);
  Real biggest(1, prec);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Real re(prec), im(prec);
      for (const auto& row : e.sigma) {
        re += row[i].re * row[j].re + row[i].im * row[j].im;
        im += row[i].im * row[j].re - row[i].re * row[j].im;
      }
      worst_imag = max(worst_imag, abs(im));
      biggest = max(biggest, abs(re));
      entries.push_back(std::move(re));
    }
  if (worst_imag > Real::pow2(-e.precision / 2, prec) * biggest)
    throw Error(ErrorCode::NumericAmbiguity, "Gram matrix has a non-negligible imaginary part");
  RunConfig c = config.at_precision(e.precision);
  return GramForm::from_entries(n, std::move(entries), c);
}

GramForm canonical_gram(const Order& a, const RunConfig& config) {
  return with_escalation(config, [&](const RunConfig& c) {
    return gram(compute_embeddings(a, c.precision, c.seed), c);
  });
}

}  // namespace gradus
