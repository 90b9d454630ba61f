#include "gradus/units.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gradus/errors.hpp"
#include "gradus/lattice.hpp"

namespace gradus {

namespace {

void require_reduced(const Order& a) {
  if (!is_reduced(a)) throw Error(ErrorCode::NotReduced, "order is not reduced");
}

Element negated(Element x) {
  for (auto& c : x) c = -c;
  return x;
}

long euler_phi(long m) {
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace

std::vector<Element> idempotents(const Order& a, const GramForm& g, std::size_t cap) {
  std::set<Element> found{a.zero()};
  for (const auto& v : enumerate_up_to(g, static_cast<long>(a.rank()), cap))
    for (const Element& x : {v, negated(v)})
      if (mul(a, x, x) == x) found.insert(x);
  return {found.begin(), found.end()};
}

std::vector<Element> idempotents(const Order& a, const RunConfig& config) {
  require_reduced(a);
  return with_escalation(config, [&](const RunConfig& c) {
    return idempotents(a, gram(compute_embeddings(a, c.precision, c.seed), c), c.enumeration_cap);
  });
}

bool is_connected(const Order& a, const GramForm& g, std::size_t cap) {
  if (a.rank() == 0) throw Error(ErrorCode::InvalidArgument, "the zero ring has no connectedness verdict");
  const bool by_count = idempotents(a, g, cap).size() == 2;
  const bool by_one = is_indecomposable(g, a.one(), cap);
  if (by_count != by_one)
    throw Error(ErrorCode::InternalInconsistency,
                "idempotent count and indecomposability of 1 disagree on connectedness");
  return by_count;
}

bool is_connected(const Order& a, const RunConfig& config) {
  require_reduced(a);
  return with_escalation(config, [&](const RunConfig& c) {
    return is_connected(a, gram(compute_embeddings(a, c.precision, c.seed), c), c.enumeration_cap);
  });
}

long largest_phi_preimage(std::size_t rank) {
  // phi(m) >= sqrt(m / 2), so no m above 2 * rank^2 qualifies.
  const long limit = 2 * static_cast<long>(rank * rank) + 2;
  long best = 1;
  for (long m = 1; m <= limit; ++m)
    if (euler_phi(m) <= static_cast<long>(rank)) best = m;
  return best;
}

long torsion_order_bound(std::size_t rank) {
  const long m = largest_phi_preimage(rank);
  return 2 * m * m;
}

std::optional<long> element_order(const Order& a, const Element& x) {
  if (x.size() != a.rank()) throw Error(ErrorCode::InvalidArgument, "element length does not match the order rank");
  const long bound = torsion_order_bound(a.rank());
  Element p = x;
  for (long n = 1; n <= bound; ++n) {
    if (p == a.one()) return n;
    p = mul(a, p, x);
  }
  return std::nullopt;
}

UnitGroupReport roots_of_unity(const Order& a, const GramForm& g, std::size_t cap) {
  UnitGroupReport report;
  if (a.rank() == 0) {
    report.roots = {a.zero()};
    report.orders = {1};
    report.count = 1;
    report.closed = true;
    return report;
  }
  const Real rank(static_cast<long>(a.rank()), g.precision());
  std::set<Element> candidates;
  for (const auto& v : enumerate_up_to(g, static_cast<long>(a.rank()), cap)) {
    switch (g.classify_zero(g.norm(v) - rank)) {
      case ZeroVerdict::Zero:
        candidates.insert(v);
        candidates.insert(negated(v));
        break;
      case ZeroVerdict::Ambiguous:
        throw Error(ErrorCode::NumericAmbiguity, "norm of " + to_string(v) + " is too close to the rank");
      case ZeroVerdict::Nonzero:
        break;
    }
  }

  // Powers of a root of unity are roots of unity, so leaving the candidate
  // set proves infinite order.
  const long bound = torsion_order_bound(a.rank());
  for (const auto& x : candidates) {
    Element p = x;
    for (long n = 1; n <= bound; ++n) {
      if (p == a.one()) {
        report.roots.push_back(x);
        report.orders.push_back(n);
        break;
      }
      p = mul(a, p, x);
      if (!candidates.count(p)) break;
    }
  }
  report.count = report.roots.size();

  const std::set<Element> roots(report.roots.begin(), report.roots.end());
  report.closed = roots.count(a.one()) && roots.count(negated(a.one()));
  for (std::size_t i = 0; i < report.count && report.closed; ++i) {
    if (!roots.count(power(a, report.roots[i], static_cast<unsigned long>(report.orders[i] - 1))))
      report.closed = false;
    for (std::size_t j = i; j < report.count && report.closed; ++j)
      if (!roots.count(mul(a, report.roots[i], report.roots[j]))) report.closed = false;
  }
  return report;
}

UnitGroupReport roots_of_unity(const Order& a, const RunConfig& config) {
  require_reduced(a);
  return with_escalation(config, [&](const RunConfig& c) {
    UnitGroupReport r =
        roots_of_unity(a, gram(compute_embeddings(a, c.precision, c.seed), c), c.enumeration_cap);
    if (!r.closed) throw Error(ErrorCode::InternalInconsistency, "roots of unity do not form a group");
    return r;
  });
}

}  // namespace gradus
