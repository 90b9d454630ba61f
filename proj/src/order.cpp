#include "gradus/order.hpp"

#include <algorithm>
#include <utility>

#include "gradus/errors.hpp"

namespace gradus {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// (x * y) expanded through raw structure constants.
IntVector raw_mul(const StructureConstants& t, std::size_t n, std::span<const mpz_class> x,
                  std::span<const mpz_class> y) {
  IntVector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      mpz_class c = x[i] * y[j];
      const IntVector& e = t[i][j];
      for (std::size_t m = 0; m < n; ++m)
        if (e[m] != 0) out[m] += c * e[m];
    }
  }
  return out;
}

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector e = zero_vector(n);
  e[i] = 1;
  return e;
}

}  // namespace

Element Order::basis_element(std::size_t i) const { return unit_vector(rank_, i); }

Order validate(StructureConstants table, Element one, std::size_t n,
               std::vector<std::string> labels) {
  if (table.size() != n || one.size() != n)
    throw Error(ErrorCode::InvalidArgument, "structure constants do not have rank " + std::to_string(n));
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "table row has wrong length");
    for (const auto& v : row)
      if (v.size() != n) throw Error(ErrorCode::InvalidArgument, "table entry has wrong length");
  }
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorCode::InvalidArgument, "label count does not match rank");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table[i][j] != table[j][i])
        throw Error(ErrorCode::NotCommutative,
                    "e_" + std::to_string(i) + "*e_" + std::to_string(j) + " != e_" +
                        std::to_string(j) + "*e_" + std::to_string(i));

  for (std::size_t i = 0; i < n; ++i)
    if (raw_mul(table, n, one, unit_vector(n, i)) != unit_vector(n, i))
      throw Error(ErrorCode::BadIdentity, "one*e_" + std::to_string(i) + " != e_" + std::to_string(i));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        IntVector left = raw_mul(table, n, table[i][j], unit_vector(n, k));
        IntVector right = raw_mul(table, n, unit_vector(n, i), table[j][k]);
        if (left != right)
          throw Error(ErrorCode::NotAssociative, "(e_i*e_j)*e_k != e_i*(e_j*e_k) at " + triple(i, j, k));
      }

  Order a;
  a.rank_ = n;
  a.table_ = std::move(table);
  a.one_ = std::move(one);
  a.labels_ = std::move(labels);
  return a;
}

Element mul(const Order& a, const Element& x, const Element& y) {
  if (x.size() != a.rank() || y.size() != a.rank())
    throw Error(ErrorCode::InvalidArgument, "element does not belong to the order");
  return raw_mul(a.table(), a.rank(), x, y);
}

Element power(const Order& a, const Element& x, unsigned long k) {
  Element result = a.one();
  Element base = x;
  while (k) {
    if (k & 1) result = mul(a, result, base);
    k >>= 1;
    if (k) base = mul(a, base, base);
  }
  return result;
}

IntMatrix regular_matrix(const Order& a, const Element& x) {
  const std::size_t n = a.rank();
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Element col = mul(a, x, a.basis_element(j));
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
  }
  return m;
}

IntMatrix trace_form(const Order& a) {
  const std::size_t n = a.rank();
  std::vector<mpz_class> traces(n);
  for (std::size_t m = 0; m < n; ++m) {
    IntMatrix reg = regular_matrix(a, a.basis_element(m));
    for (std::size_t i = 0; i < n; ++i) traces[m] += reg(i, i);
  }
  IntMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = dot(a.product(i, j), traces);
  return t;
}

SublatticeBasis nilradical(const Order& a) {
  const std::size_t n = a.rank();
  if (n == 0) return SublatticeBasis(0);
  SublatticeBasis rad = kernel_saturated(trace_form(a));
  // Nilpotency index is at most n, so ceil(log2 n) + 1 squarings suffice.
  unsigned squarings = 1;
  while ((std::size_t{1} << (squarings - 1)) < n) ++squarings;
  for (std::size_t r = 0; r < rad.rank(); ++r) {
    Element x = rad.basis().row_vector(r);
    for (unsigned s = 0; s < squarings && !is_zero(x); ++s) x = mul(a, x, x);
    if (!is_zero(x))
      throw Error(ErrorCode::InternalInconsistency,
                  "trace-form radical element " + to_string(rad.basis().row(r)) + " is not nilpotent");
  }
  return rad;
}

bool is_reduced(const Order& a) { return nilradical(a).empty(); }

GroupRing group_ring(const std::vector<long>& cyclic_factors) {
  std::size_t n = 1;
  for (long d : cyclic_factors) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "cyclic factor must be positive");
    n *= static_cast<std::size_t>(d);
  }
  const std::size_t k = cyclic_factors.size();
  // Mixed radix with the first factor most significant.
  std::vector<std::vector<long>> elements(n, std::vector<long>(k, 0));
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (std::size_t f = k; f-- > 0;) {
      elements[idx][f] = static_cast<long>(rest % cyclic_factors[f]);
      rest /= cyclic_factors[f];
    }
  }
  auto index_of = [&](const std::vector<long>& g) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < k; ++f) idx = idx * cyclic_factors[f] + g[f];
    return idx;
  };

  StructureConstants table(n, std::vector<IntVector>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string label = "g";
    for (std::size_t f = 0; f < k; ++f) label += (f ? "," : "(") + std::to_string(elements[i][f]);
    labels[i] = k ? label + ")" : "1";
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long> g(k);
      for (std::size_t f = 0; f < k; ++f) g[f] = (elements[i][f] + elements[j][f]) % cyclic_factors[f];
      table[i][j] = unit_vector(n, index_of(g));
    }
  }
  GroupRing out;
  out.order = validate(std::move(table), unit_vector(n, 0), n, std::move(labels));
  out.elements = std::move(elements);
  out.cyclic_factors = cyclic_factors;
  return out;
}

QuotientOrder quotient_order(const Order& a, const std::vector<Element>& ideal_gens) {
  const std::size_t n = a.rank();
  SublatticeBasis ideal = SublatticeBasis::span(n, ideal_gens);
  // Close under multiplication by the basis until the HNF stabilizes.
  while (true) {
    std::vector<Element> gens = ideal.basis().row_vectors();
    const std::size_t count = gens.size();
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t i = 0; i < n; ++i) gens.push_back(mul(a, gens[r], a.basis_element(i)));
    SublatticeBasis next = SublatticeBasis::span(n, gens);
    if (next == ideal) break;
    ideal = std::move(next);
  }
  if (!(saturate(ideal) == ideal))
    throw Error(ErrorCode::TorsionQuotient,
                "quotient has torsion of order " + ideal.saturation_index().get_str());

  const std::size_t r = ideal.rank();
  const std::size_t m = n - r;
  // Column operations B * V = [D | 0] put the ideal into the first r
  // coordinates of x * V; the last m coordinates realize A -> A/I.
  IntMatrix v = IntMatrix::identity(n);
  if (r > 0) v = hnf(ideal.basis().transpose()).u.transpose();
  IntMatrix v_inv = hnf(v).u;  // v is unimodular, so its HNF is the identity

  IntMatrix projection(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) projection(i, k) = v(i, r + k);
  IntMatrix lifts = v_inv.rows_range(r, n);

  StructureConstants table(m, std::vector<IntVector>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i][j] = gradus::mul(mul(a, lifts.row_vector(i), lifts.row_vector(j)), projection);
  Element one = gradus::mul(std::span<const mpz_class>(a.one()), projection);

  QuotientOrder out;
  out.order = validate(std::move(table), std::move(one), m);
  out.projection = std::move(projection);
  out.lifts = std::move(lifts);
  out.ideal = std::move(ideal);
  return out;
}

Order monogenic_order(const std::vector<long>& coefficients) {
  if (coefficients.size() < 2 || coefficients.back() != 1)
    throw Error(ErrorCode::InvalidArgument, "polynomial must be monic of degree >= 1");
  const std::size_t n = coefficients.size() - 1;
  // powers[k] = X^k reduced mod f, for k < 2n - 1.
  std::vector<IntVector> powers;
  powers.push_back(unit_vector(n, 0));
  for (std::size_t k = 1; k + 1 < 2 * n; ++k) {
    const IntVector& prev = powers.back();
    IntVector next = zero_vector(n);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = prev[i];
    const mpz_class& top = prev[n - 1];
    for (std::size_t i = 0; i < n; ++i) next[i] -= top * coefficients[i];
    powers.push_back(std::move(next));
  }
  StructureConstants table(n, std::vector<IntVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = powers[i + j];
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
  return validate(std::move(table), unit_vector(n, 0), n, std::move(labels));
}

Order product_order(const Order& a, const Order& b) {
  const std::size_t na = a.rank(), nb = b.rank(), n = na + nb;
  StructureConstants table(n, std::vector<IntVector>(n, zero_vector(n)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      std::copy(a.product(i, j).begin(), a.product(i, j).end(), table[i][j].begin());
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      std::copy(b.product(i, j).begin(), b.product(i, j).end(), table[na + i][na + j].begin() + na);
  Element one = a.one();
  one.insert(one.end(), b.one().begin(), b.one().end());
  std::vector<std::string> labels;
  if (nb == 0) {
    labels = a.labels();
  } else if (na == 0) {
    labels = b.labels();
  } else if (!a.labels().empty() && !b.labels().empty()) {
    for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
    for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
  }
  return validate(std::move(table), std::move(one), n, std::move(labels));
}

Order zero_order() { return validate({}, {}, 0); }

Order suborder(const Order& a, const SublatticeBasis& sub) {
  if (sub.ambient_rank() != a.rank()) throw Error(ErrorCode::InvalidArgument, "ambient rank mismatch");
  const std::size_t m = sub.rank();
  StructureConstants table(m, std::vector<IntVector>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto c = sub.coordinates(mul(a, sub.basis().row_vector(i), sub.basis().row_vector(j)));
      if (!c) throw Error(ErrorCode::InvalidArgument, "sublattice is not closed under multiplication");
      table[i][j] = std::move(*c);
    }
  auto one = sub.coordinates(a.one());
  if (!one) throw Error(ErrorCode::BadIdentity, "sublattice does not contain 1");
  return validate(std::move(table), std::move(*one), m);
}

Order tensor_order(const Order& a, const Order& b) {
  const std::size_t na = a.rank(), nb = b.rank(), n = na * nb;
  StructureConstants table(n, std::vector<IntVector>(n, zero_vector(n)));
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          IntVector& out = table[i1 * nb + j1][i2 * nb + j2];
          const IntVector& pa = a.product(i1, i2);
          const IntVector& pb = b.product(j1, j2);
          for (std::size_t p = 0; p < na; ++p)
            for (std::size_t q = 0; q < nb; ++q) out[p * nb + q] = pa[p] * pb[q];
        }
  Element one = zero_vector(n);
  for (std::size_t p = 0; p < na; ++p)
    for (std::size_t q = 0; q < nb; ++q) one[p * nb + q] = a.one()[p] * b.one()[q];
  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty())
    for (const auto& la : a.labels())
      for (const auto& lb : b.labels()) labels.push_back(la == "1" ? lb : lb == "1" ? la : la + "*" + lb);
  return validate(std::move(table), std::move(one), n, std::move(labels));
}

}  // namespace gradus
