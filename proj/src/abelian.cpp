#include "gradus/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gradus/errors.hpp"

namespace gradus {

FinAbGroup::FinAbGroup(std::vector<long> invariant_factors) {
  for (long d : invariant_factors) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "invariant factors must be positive");
    if (d > 1) factors_.push_back(d);
  }
  for (std::size_t i = 1; i < factors_.size(); ++i)
    if (factors_[i] % factors_[i - 1] != 0)
      throw Error(ErrorCode::InvalidArgument, "invariant factors must form a divisibility chain");
}

long FinAbGroup::order() const {
  long n = 1;
  for (long d : factors_) n *= d;
  return n;
}

GroupElement FinAbGroup::generator(std::size_t i) const {
  GroupElement g = zero();
  g.at(i) = 1;
  return g;
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = (a[i] + b[i]) % factors_[i];
  return c;
}

GroupElement FinAbGroup::negate(const GroupElement& a) const {
  GroupElement c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = (factors_[i] - a[i]) % factors_[i];
  return c;
}

GroupElement FinAbGroup::scale(const GroupElement& a, const mpz_class& k) const {
  GroupElement c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    mpz_class v = k * a[i];
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(factors_[i]));
    c[i] = r.get_si();
  }
  return c;
}

bool FinAbGroup::contains(const GroupElement& a) const {
  if (a.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < 0 || a[i] >= factors_[i]) return false;
  return true;
}

long FinAbGroup::element_order(const GroupElement& a) const {
  long n = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    n = std::lcm(n, factors_[i] / std::gcd(factors_[i], a[i]));
  return n;
}

std::vector<GroupElement> FinAbGroup::elements() const {
  std::vector<GroupElement> out;
  GroupElement g = zero();
  const long total = order();
  for (long idx = 0; idx < total; ++idx) {
    out.push_back(g);
    for (std::size_t i = factors_.size(); i-- > 0;) {
      if (++g[i] < factors_[i]) break;
      g[i] = 0;
    }
  }
  return out;
}

std::vector<GroupElement> FinAbGroup::generated_subgroup(const std::vector<GroupElement>& gens) const {
  std::set<GroupElement> seen{zero()};
  std::vector<GroupElement> frontier{zero()};
  while (!frontier.empty()) {
    GroupElement x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      GroupElement y = add(x, g);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  GroupElement y = target.zero();
  for (std::size_t i = 0; i < x.size(); ++i) y = target.add(y, target.scale(images[i], x[i]));
  return y;
}

bool GroupHom::well_defined() const {
  if (images.size() != source.rank()) return false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!target.contains(images[i])) return false;
    if (target.scale(images[i], source.invariant_factors()[i]) != target.zero()) return false;
  }
  return true;
}

bool GroupHom::is_isomorphism() const {
  if (!well_defined() || source.order() != target.order()) return false;
  return static_cast<long>(target.generated_subgroup(images).size()) == target.order();
}

GroupHom identity_hom(const FinAbGroup& g) {
  GroupHom h{g, g, {}};
  for (std::size_t i = 0; i < g.rank(); ++i) h.images.push_back(g.generator(i));
  return h;
}

GroupHom trivial_hom(const FinAbGroup& source, const FinAbGroup& target) {
  return GroupHom{source, target, std::vector<GroupElement>(source.rank(), target.zero())};
}

Presentation group_from_relations(std::size_t num_gens, const std::vector<IntVector>& relations) {
  Presentation out;
  if (num_gens == 0) return out;
  if (relations.size() < num_gens)
    throw Error(ErrorCode::InfiniteGroup, "fewer relations than generators: the group is infinite");
  IntMatrix r = IntMatrix::from_rows(relations, num_gens);
  SnfResult s = snf(r);
  IntMatrix v_inv = hnf(s.v).u;  // V is unimodular, so U * V = I

  std::vector<long> kept_factors;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < num_gens; ++i) {
    const mpz_class& d = s.s(i, i);
    if (d == 0) throw Error(ErrorCode::InfiniteGroup, "relation matrix has a zero invariant factor");
    if (!d.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "group too large");
    if (d > 1) {
      kept.push_back(i);
      kept_factors.push_back(d.get_si());
    }
  }
  out.group = FinAbGroup(kept_factors);
  for (std::size_t j = 0; j < num_gens; ++j) {
    GroupElement g;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      mpz_class r_;
      mpz_fdiv_r_ui(r_.get_mpz_t(), s.v(j, kept[k]).get_mpz_t(), static_cast<unsigned long>(kept_factors[k]));
      g.push_back(r_.get_si());
    }
    out.generator_images.push_back(std::move(g));
  }
  for (std::size_t i : kept) out.generator_lifts.push_back(v_inv.row_vector(i));
  return out;
}

}  // namespace gradus
