#include <algorithm>
#include <cmath>

#include "gradus/errors.hpp"
#include "gradus/kernels.hpp"
#include "gradus/lattice.hpp"

namespace gradus {

namespace {

// Relative slack on the double-precision search radius. Candidates inside
// the slack are settled at working precision.
constexpr double kRadiusSlack = 1e-8;
constexpr double kScreenSlack = 1e-9;

std::vector<Real> basis_gram(const GramForm& g, const IntMatrix& b) {
  const std::size_t n = g.n();
  std::vector<std::vector<Real>> gb_rows;
  for (std::size_t i = 0; i < n; ++i) gb_rows.push_back(g.apply(b.row(i)));
  std::vector<Real> out(n * n, Real(g.precision()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Real s(g.precision());
      for (std::size_t k = 0; k < n; ++k) s.add_mul(b(i, k), gb_rows[j][k]);
      out[i * n + j] = std::move(s);
    }
  return out;
}

mpz_class round_to_integer(const Real& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDN);
  return z;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c) return c < 0;
  }
  return false;
}

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

struct Enumerator {
  std::size_t n;
  std::vector<double> q;                 // squared Gram-Schmidt lengths
  std::vector<std::vector<double>> mu;   // mu[i][j], j < i
  double radius;
  std::size_t cap;
  std::vector<long> y;
  std::vector<double> center;
  std::vector<std::vector<long>> found;

  void run() {
    y.assign(n, 0);
    center.assign(n, 0);
    descend(static_cast<long>(n) - 1, radius, true);
  }

  void descend(long i, double remaining, bool higher_zero) {
    if (i < 0) {
      if (higher_zero) return;  // the zero vector
      if (found.size() >= cap)
        throw Error(ErrorCode::EnumerationBudgetExceeded,
                    "more than " + std::to_string(cap) + " lattice vectors below the bound");
      found.push_back(y);
      return;
    }
    const std::size_t k = static_cast<std::size_t>(i);
    double c = 0;
    for (std::size_t j = k + 1; j < n; ++j) c -= mu[j][k] * static_cast<double>(y[j]);
    center[k] = c;
    const double span = std::sqrt(std::max(0.0, remaining / q[k]));
    long lo = static_cast<long>(std::ceil(c - span));
    const long hi = static_cast<long>(std::floor(c + span));
    if (higher_zero) lo = std::max(lo, 0L);
    for (long v = lo; v <= hi; ++v) {
      const double d = static_cast<double>(v) - c;
      const double rest = remaining - q[k] * d * d;
      if (rest < 0) continue;
      y[k] = v;
      descend(i - 1, rest, higher_zero && v == 0);
    }
    y[k] = 0;
  }
};

}  // namespace

IntMatrix lll_reduce(const GramForm& g, double delta) {
  const std::size_t n = g.n();
  const long prec = g.precision();
  IntMatrix b = IntMatrix::identity(n);
  if (n <= 1) return b;
  Real delta_r(prec);
  mpfr_set_d(delta_r.get(), delta, MPFR_RNDN);
  const Real half = Real::pow2(-1, prec);

  // Gram-Schmidt data recomputed from scratch; the dimensions involved are
  // tiny.
  std::vector<Real> gb, bstar(n, Real(prec));
  std::vector<std::vector<Real>> mu(n, std::vector<Real>(n, Real(prec)));
  auto refresh = [&] {
    gb = basis_gram(g, b);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Real s = gb[i * n + j];
        for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * bstar[k];
        mu[i][j] = s / bstar[j];
      }
      Real s = gb[i * n + i];
      for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * bstar[k];
      bstar[i] = std::move(s);
    }
  };

  refresh();
  std::size_t k = 1;
  int guard = 0;
  while (k < n) {
    if (++guard > 100000) throw Error(ErrorCode::NumericAmbiguity, "LLL did not terminate");
    for (std::size_t j = k; j-- > 0;) {
      if (!(abs(mu[k][j]) > half)) continue;
      mpz_class q = round_to_integer(mu[k][j]);
      b.add_row_multiple(k, j, -q);
      refresh();
    }
    Real lovasz = (delta_r - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1];
    if (bstar[k] >= lovasz) {
      ++k;
    } else {
      b.swap_rows(k, k - 1);
      refresh();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

std::vector<IntVector> enumerate_up_to(const GramForm& g, const Real& bound, std::size_t cap) {
  const std::size_t n = g.n();
  std::vector<IntVector> out;
  if (n == 0 || bound.sign() <= 0) return out;

  IntMatrix b = lll_reduce(g);
  std::vector<Real> gb = basis_gram(g, b);

  Enumerator en;
  en.n = n;
  en.cap = cap;
  en.q.assign(n, 0);
  en.mu.assign(n, std::vector<double>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double s = gb[i * n + j].to_double();
      for (std::size_t k = 0; k < j; ++k) s -= en.mu[j][k] * en.mu[i][k] * en.q[k];
      en.mu[i][j] = s / en.q[j];
    }
    double s = gb[i * n + i].to_double();
    for (std::size_t k = 0; k < i; ++k) s -= en.mu[i][k] * en.mu[i][k] * en.q[k];
    en.q[i] = s;
  }
  const double bound_d = bound.to_double();
  en.radius = bound_d * (1 + kRadiusSlack) + kRadiusSlack * g.max_abs();
  en.run();

  // Map to standard coordinates and screen norms in double precision.
  const std::size_t count = en.found.size();
  std::vector<IntVector> xs;
  xs.reserve(count);
  std::vector<double> xd(count * n), xabs(count * n);
  for (std::size_t k = 0; k < count; ++k) {
    IntVector x = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i)
      if (en.found[k][i] != 0)
        for (std::size_t j = 0; j < n; ++j) x[j] += en.found[k][i] * b(i, j);
    for (std::size_t j = 0; j < n; ++j) {
      xd[k * n + j] = x[j].get_d();
      xabs[k * n + j] = std::abs(xd[k * n + j]);
    }
    xs.push_back(std::move(x));
  }
  std::vector<double> gabs(g.approx().begin(), g.approx().end());
  for (auto& v : gabs) v = std::abs(v);
  std::vector<double> norms(count), scales(count);
  kernels::quadratic_forms(g.approx(), n, xd, norms);
  kernels::quadratic_forms(gabs, n, xabs, scales);

  const Real upper = bound + g.tau();
  for (std::size_t k = 0; k < count; ++k) {
    const double err = kScreenSlack * (1 + scales[k]) + kScreenSlack * bound_d;
    if (norms[k] > bound_d + err) continue;
    if (norms[k] >= bound_d - err) {
      Real exact = g.norm(xs[k]);
      if (exact > upper) {
        if (exact - bound <= g.band_top())
          throw Error(ErrorCode::NumericAmbiguity, "vector norm within the ambiguity band of the bound");
        continue;
      }
    }
    normalize_sign(xs[k]);
    out.push_back(std::move(xs[k]));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<IntVector> enumerate_up_to(const GramForm& g, long bound, std::size_t cap) {
  return enumerate_up_to(g, Real(bound, g.precision()), cap);
}

}  // namespace gradus
