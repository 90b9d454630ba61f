#include "gradus/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gradus/errors.hpp"
#include "gradus/kernels.hpp"

namespace gradus {

namespace {

constexpr double kScreenSlack = 1e-9;

bool lex_less(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c) return c < 0;
  }
  return false;
}

// Pairwise inner products among a fixed list of integer vectors. Double
// screening decides clear cases; the rest are recomputed with MPFR.
class InnerProducts {
 public:
  InnerProducts(const GramForm& g, const std::vector<IntVector>& vecs)
      : g_(g), vecs_(vecs), n_(g.n()), count_(vecs.size()) {
    xd_.resize(count_ * n_);
    xabs_.resize(count_ * n_);
    for (std::size_t k = 0; k < count_; ++k)
      for (std::size_t j = 0; j < n_; ++j) {
        xd_[k * n_ + j] = vecs[k][j].get_d();
        xabs_[k * n_ + j] = std::abs(xd_[k * n_ + j]);
      }
    gabs_.assign(g.approx().begin(), g.approx().end());
    for (auto& v : gabs_) v = std::abs(v);
    norms_d_.resize(count_);
    norm_err_.resize(count_);
    kernels::quadratic_forms(g.approx(), n_, xd_, norms_d_);
    kernels::quadratic_forms(gabs_, n_, xabs_, norm_err_);
    for (auto& e : norm_err_) e = kScreenSlack * (1 + e);
    band_ = g.band_top().to_double();
    exact_gx_.resize(count_);
    exact_norm_.resize(count_);
  }

  std::size_t size() const { return count_; }
  double band() const { return band_; }
  double norm(std::size_t k) const { return norms_d_[k]; }
  double norm_error(std::size_t k) const { return norm_err_[k]; }

  // vals[k] ~ <x_k, x_v>, errs[k] bounds the screening error.
  void against(std::size_t v, std::vector<double>& vals, std::vector<double>& errs) const {
    std::vector<double> gv(n_), gv_abs(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      gv[i] = kernels::dot({g_.approx().data() + i * n_, n_}, {xd_.data() + v * n_, n_});
      gv_abs[i] = kernels::dot({gabs_.data() + i * n_, n_}, {xabs_.data() + v * n_, n_});
    }
    vals.resize(count_);
    errs.resize(count_);
    kernels::dots(xd_, n_, gv, vals);
    kernels::dots(xabs_, n_, gv_abs, errs);
    for (auto& e : errs) e = kScreenSlack * (1 + e);
  }

  Real exact_inner(std::size_t u, std::size_t v) {
    const std::vector<Real>& gv = exact_gx(v);
    Real s(g_.precision());
    for (std::size_t i = 0; i < n_; ++i) s.add_mul(vecs_[u][i], gv[i]);
    return s;
  }

  const Real& exact_norm(std::size_t k) {
    if (!exact_norm_[k]) exact_norm_[k] = exact_inner(k, k);
    return *exact_norm_[k];
  }

 private:
  const std::vector<Real>& exact_gx(std::size_t v) {
    if (!exact_gx_[v]) exact_gx_[v] = g_.apply(vecs_[v]);
    return *exact_gx_[v];
  }

  const GramForm& g_;
  const std::vector<IntVector>& vecs_;
  std::size_t n_, count_;
  std::vector<double> xd_, xabs_, gabs_, norms_d_, norm_err_;
  double band_ = 0;
  std::vector<std::optional<std::vector<Real>>> exact_gx_;
  std::vector<std::optional<Real>> exact_norm_;
};

// No x = +-x_k other than v itself gives <x, v - x> >= 0.
bool indecomposable_in(InnerProducts& ip, const GramForm& g, std::size_t v) {
  std::vector<double> vals, errs;
  ip.against(v, vals, errs);
  for (std::size_t k = 0; k < ip.size(); ++k) {
    for (int s : {1, -1}) {
      if (k == v && s == 1) continue;
      const double approx = s * vals[k] - ip.norm(k);
      const double err = errs[k] + ip.norm_error(k);
      if (approx < -err - ip.band()) continue;
      if (approx > err) return false;
      Real exact = ip.exact_inner(k, v);
      if (s < 0) exact = -exact;
      exact -= ip.exact_norm(k);
      if (g.is_nonnegative(exact)) return false;
    }
  }
  return true;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

bool is_decomposition(const GramForm& g, std::span<const mpz_class> z, std::span<const mpz_class> x,
                      std::span<const mpz_class> y) {
  if (z.size() != g.n() || x.size() != g.n() || y.size() != g.n())
    throw Error(ErrorCode::InvalidArgument, "vector length does not match the lattice rank");
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] != x[i] + y[i]) return false;
  return g.is_nonnegative(g.inner(x, y));
}

bool is_indecomposable(const GramForm& g, std::span<const mpz_class> v, std::size_t cap) {
  if (v.size() != g.n()) throw Error(ErrorCode::InvalidArgument, "vector length does not match the lattice rank");
  if (is_zero(v)) throw Error(ErrorCode::InvalidArgument, "the zero vector is not indecomposable by definition");
  IntVector target(v.begin(), v.end());
  for (const auto& c : target) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& t : target) t = -t;
    break;
  }
  std::vector<IntVector> list = enumerate_up_to(g, g.norm(target), cap);
  auto it = std::find(list.begin(), list.end(), target);
  if (it == list.end()) {
    list.push_back(target);
    it = list.end() - 1;
  }
  const std::size_t index = static_cast<std::size_t>(it - list.begin());
  InnerProducts ip(g, list);
  return indecomposable_in(ip, g, index);
}

SDecomposition universal_s_decomposition(const GramForm& g, std::size_t cap) {
  const std::size_t n = g.n();
  SDecomposition out;
  out.ambient_rank = n;
  if (n == 0) return out;

  // Each reduced basis vector is a sum of indecomposables of no larger norm,
  // so the indecomposables below the largest reduced norm generate Z^n.
  IntMatrix reduced = lll_reduce(g);
  Real bound(g.precision());
  for (std::size_t i = 0; i < n; ++i) bound = max(bound, g.norm(reduced.row(i)));

  std::vector<IntVector> list = enumerate_up_to(g, bound, cap);
  InnerProducts ip(g, list);
  std::vector<std::size_t> indec;
  for (std::size_t k = 0; k < list.size(); ++k)
    if (indecomposable_in(ip, g, k)) indec.push_back(k);

  std::vector<std::size_t> parent(indec.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<double> vals, errs;
  for (std::size_t a = 0; a < indec.size(); ++a) {
    ip.against(indec[a], vals, errs);
    for (std::size_t b = a + 1; b < indec.size(); ++b) {
      const std::size_t k = indec[b];
      bool linked;
      if (std::abs(vals[k]) - errs[k] > ip.band())
        linked = true;
      else
        linked = !g.is_zero(ip.exact_inner(k, indec[a]));
      if (linked) parent[find_root(parent, a)] = find_root(parent, b);
    }
  }

  std::vector<std::vector<IntVector>> groups;
  std::vector<std::size_t> group_of(indec.size(), indec.size());
  for (std::size_t a = 0; a < indec.size(); ++a) {
    const std::size_t r = find_root(parent, a);
    if (group_of[r] == indec.size()) {
      group_of[r] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(list[indec[a]]);
  }
  for (const auto& group : groups) out.components.push_back(SublatticeBasis::span(n, group));

  auto smallest_row = [](const SublatticeBasis& s) {
    std::size_t best = 0;
    for (std::size_t r = 1; r < s.rank(); ++r)
      if (lex_less(s.basis().row(r), s.basis().row(best))) best = r;
    return s.basis().row(best);
  };
  std::sort(out.components.begin(), out.components.end(),
            [&](const SublatticeBasis& a, const SublatticeBasis& b) {
              return lex_less(smallest_row(a), smallest_row(b));
            });

  if (auto problem = check_s_decomposition(g, out))
    throw Error(ErrorCode::NumericAmbiguity, "decomposition failed verification: " + *problem);
  return out;
}

std::optional<std::string> check_s_decomposition(const GramForm& g, const SDecomposition& d) {
  for (std::size_t s = 0; s < d.components.size(); ++s) {
    if (d.components[s].empty()) return "component " + std::to_string(s) + " is zero";
    if (d.components[s].ambient_rank() != d.ambient_rank)
      return "component " + std::to_string(s) + " has the wrong ambient rank";
  }
  try {
    mpz_class index = direct_sum_index(d.components, d.ambient_rank);
    if (index != 1) return "components span a sublattice of index " + index.get_str();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfiniteIndex) throw;
    return std::string(e.what());
  }
  for (std::size_t s = 0; s < d.components.size(); ++s)
    for (std::size_t t = s + 1; t < d.components.size(); ++t)
      for (std::size_t i = 0; i < d.components[s].rank(); ++i)
        for (std::size_t j = 0; j < d.components[t].rank(); ++j)
          if (!g.is_zero(g.inner(d.components[s].basis().row(i), d.components[t].basis().row(j))))
            return "components " + std::to_string(s) + " and " + std::to_string(t) + " are not orthogonal";
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> coarsening_map(const SDecomposition& fine,
                                                       std::span<const SublatticeBasis> coarse) {
  std::vector<std::size_t> f(fine.components.size());
  for (std::size_t s = 0; s < fine.components.size(); ++s) {
    std::size_t hits = 0;
    for (std::size_t t = 0; t < coarse.size(); ++t)
      if (coarse[t].contains(fine.components[s])) {
        f[s] = t;
        ++hits;
      }
    if (hits != 1) return std::nullopt;
  }
  for (std::size_t t = 0; t < coarse.size(); ++t) {
    SublatticeBasis sum(fine.ambient_rank);
    for (std::size_t s = 0; s < f.size(); ++s)
      if (f[s] == t) sum = sum + fine.components[s];
    if (!(sum == coarse[t])) return std::nullopt;
  }
  return f;
}

}  // namespace gradus
