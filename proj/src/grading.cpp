#include "gradus/grading.hpp"

#include <set>

#include "gradus/embeddings.hpp"
#include "gradus/errors.hpp"

namespace gradus {

namespace {

std::string label(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

struct StackedPieces {
  std::vector<GroupElement> keys;
  std::vector<std::size_t> offsets;  // row offset of each piece in matrix
  IntMatrix matrix;
};

StackedPieces stack_pieces(const Grading& gr) {
  StackedPieces s;
  s.matrix = IntMatrix(0, gr.ambient_rank);
  for (const auto& [g, piece] : gr.pieces) {
    s.keys.push_back(g);
    s.offsets.push_back(s.matrix.rows());
    for (std::size_t r = 0; r < piece.rank(); ++r) s.matrix.append_row(piece.basis().row(r));
  }
  s.offsets.push_back(s.matrix.rows());
  return s;
}

}  // namespace

SublatticeBasis Grading::piece(const GroupElement& g) const {
  auto it = pieces.find(g);
  return it == pieces.end() ? SublatticeBasis(ambient_rank) : it->second;
}

std::vector<GroupElement> Grading::support() const {
  std::vector<GroupElement> out;
  for (const auto& [g, piece] : pieces) out.push_back(g);
  return out;
}

GradingReport verify_grading(const Order& a, const Grading& gr) {
  GradingReport report;
  if (gr.ambient_rank != a.rank()) {
    report.ranks_match = false;
    report.failures.push_back("grading rank differs from order rank");
    return report;
  }
  for (const auto& [g, piece] : gr.pieces) {
    if (piece.ambient_rank() != a.rank()) {
      report.ranks_match = false;
      report.failures.push_back("piece " + label(g) + " has the wrong ambient rank");
    }
    if (!gr.group.contains(g)) {
      report.ranks_match = false;
      report.failures.push_back("piece label " + label(g) + " is not a group element");
    }
  }
  if (!report.ranks_match) return report;

  std::vector<SublatticeBasis> parts;
  for (const auto& [g, piece] : gr.pieces) parts.push_back(piece);
  try {
    mpz_class index = direct_sum_index(parts, a.rank());
    if (index != 1) {
      report.direct_sum = false;
      report.failures.push_back("pieces span a sublattice of index " + index.get_str());
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfiniteIndex) throw;
    report.direct_sum = false;
    report.failures.push_back(e.what());
  }

  const GroupElement neutral = gr.group.zero();
  for (auto it = gr.pieces.begin(); it != gr.pieces.end(); ++it)
    for (auto jt = it; jt != gr.pieces.end(); ++jt) {
      const GroupElement target_label = gr.group.add(it->first, jt->first);
      const SublatticeBasis target = gr.piece(target_label);
      bool ok = true;
      for (std::size_t r = 0; r < it->second.rank() && ok; ++r)
        for (std::size_t c = 0; c < jt->second.rank() && ok; ++c) {
          Element p = mul(a, it->second.basis().row_vector(r), jt->second.basis().row_vector(c));
          if (!target.contains(p)) {
            ok = false;
            report.failures.push_back("product of " + label(it->first) + " and " + label(jt->first) +
                                      " basis vectors " + to_string(p) + " is not in piece " +
                                      label(target_label));
          }
        }
      if (!ok) {
        report.closed_under_products = false;
        if (it->first == neutral && jt->first == neutral) report.neutral_is_ring = false;
      }
    }

  if (!gr.piece(neutral).contains(a.one())) {
    report.identity_in_neutral = false;
    report.failures.push_back("1 is not in the neutral piece");
  }
  return report;
}

Grading trivial_grading(const Order& a) {
  Grading g;
  g.ambient_rank = a.rank();
  if (a.rank() > 0) g.pieces[g.group.zero()] = SublatticeBasis::full(a.rank());
  return g;
}

Grading push_forward(const Grading& gr, const GroupHom& f) {
  if (!(f.source == gr.group)) throw Error(ErrorCode::InvalidArgument, "homomorphism source is not the grading group");
  Grading out;
  out.group = f.target;
  out.ambient_rank = gr.ambient_rank;
  for (const auto& [g, piece] : gr.pieces) {
    GroupElement d = f.apply(g);
    auto it = out.pieces.find(d);
    if (it == out.pieces.end())
      out.pieces.emplace(d, piece);
    else
      it->second = it->second + piece;
  }
  return out;
}

GradedOrder universal_grading(const Order& a, const RunConfig& config) {
  if (!is_reduced(a)) throw Error(ErrorCode::NotReduced, "order is not reduced; it has no universal grading here");
  return with_escalation(config, [&](const RunConfig& c) {
    GramForm g = gram(compute_embeddings(a, c.precision, c.seed), c);
    GradedOrder out;
    out.precision_used = c.precision;
    out.decomposition = universal_s_decomposition(g, c.enumeration_cap);
    const auto& comps = out.decomposition.components;
    const std::size_t s_count = comps.size();

    IntMatrix stacked = stack(comps);
    std::vector<std::size_t> owner;
    for (std::size_t s = 0; s < s_count; ++s)
      for (std::size_t r = 0; r < comps[s].rank(); ++r) owner.push_back(s);

    // Bilinearity makes pairs of basis vectors sufficient.
    std::set<IntVector> relations;
    for (std::size_t s1 = 0; s1 < s_count; ++s1)
      for (std::size_t s2 = s1; s2 < s_count; ++s2)
        for (std::size_t i = 0; i < comps[s1].rank(); ++i)
          for (std::size_t j = 0; j < comps[s2].rank(); ++j) {
            Element p = mul(a, comps[s1].basis().row_vector(i), comps[s2].basis().row_vector(j));
            auto coords = solve_left(stacked, p);
            if (!coords) throw Error(ErrorCode::InternalInconsistency, "components do not span the order");
            std::vector<bool> hit(s_count, false);
            for (std::size_t k = 0; k < coords->size(); ++k)
              if ((*coords)[k] != 0) hit[owner[k]] = true;
            for (std::size_t s3 = 0; s3 < s_count; ++s3) {
              if (!hit[s3]) continue;
              IntVector rel = zero_vector(s_count);
              rel[s1] += 1;
              rel[s2] += 1;
              rel[s3] -= 1;
              relations.insert(std::move(rel));
            }
          }
    out.relations.assign(relations.begin(), relations.end());

    Presentation p = group_from_relations(s_count, out.relations);
    out.generator_map = p.generator_images;
    out.generator_lifts = p.generator_lifts;
    out.grading.group = p.group;
    out.grading.ambient_rank = a.rank();
    for (std::size_t s = 0; s < s_count; ++s) {
      auto it = out.grading.pieces.find(p.generator_images[s]);
      if (it == out.grading.pieces.end())
        out.grading.pieces.emplace(p.generator_images[s], comps[s]);
      else
        it->second = it->second + comps[s];
    }

    GradingReport report = verify_grading(a, out.grading);
    if (!report.passed())
      throw Error(ErrorCode::InternalInconsistency, "constructed grading fails verification: " + report.failures.front());
    if (static_cast<long>(p.group.generated_subgroup(out.grading.support()).size()) != p.group.order())
      throw Error(ErrorCode::InternalInconsistency, "support does not generate the grading group");
    return out;
  });
}

GroupHom find_morphism(const GradedOrder& u, const Grading& c) {
  if (c.ambient_rank != u.grading.ambient_rank)
    throw Error(ErrorCode::NoMorphism, "gradings refer to orders of different rank");
  const auto& comps = u.decomposition.components;
  std::vector<GroupElement> g(comps.size());
  for (std::size_t s = 0; s < comps.size(); ++s) {
    std::size_t hits = 0;
    for (const auto& [d, piece] : c.pieces)
      if (piece.contains(comps[s])) {
        g[s] = d;
        ++hits;
      }
    if (hits != 1)
      throw Error(ErrorCode::Ambiguous, "component " + std::to_string(s) + " lies in " + std::to_string(hits) +
                                            " pieces of the target grading");
  }
  auto evaluate = [&](const IntVector& x) {
    GroupElement y = c.group.zero();
    for (std::size_t s = 0; s < x.size(); ++s) y = c.group.add(y, c.group.scale(g[s], x[s]));
    return y;
  };
  for (const auto& rel : u.relations)
    if (evaluate(rel) != c.group.zero())
      throw Error(ErrorCode::NoMorphism, "component labels violate the relation " + to_string(rel));

  GroupHom f{u.grading.group, c.group, {}};
  for (const auto& lift : u.generator_lifts) f.images.push_back(evaluate(lift));
  if (!f.well_defined()) throw Error(ErrorCode::NoMorphism, "induced map is not a homomorphism");
  if (!(push_forward(u.grading, f) == c))
    throw Error(ErrorCode::NoMorphism, "pushforward along the induced map differs from the target grading");
  return f;
}

std::map<GroupElement, Element> homogeneous_parts(const Grading& gr, const Element& x) {
  StackedPieces s = stack_pieces(gr);
  std::map<GroupElement, Element> parts;
  if (s.matrix.rows() == 0) {
    if (!is_zero(x)) throw Error(ErrorCode::InvalidArgument, "grading has no pieces");
    return parts;
  }
  auto coords = solve_left(s.matrix, x);
  if (!coords) throw Error(ErrorCode::InvalidArgument, "element is not in the span of the pieces");
  for (std::size_t k = 0; k < s.keys.size(); ++k) {
    Element part = zero_vector(gr.ambient_rank);
    for (std::size_t r = s.offsets[k]; r < s.offsets[k + 1]; ++r)
      for (std::size_t j = 0; j < gr.ambient_rank; ++j) part[j] += (*coords)[r] * s.matrix(r, j);
    if (!is_zero(part)) parts.emplace(s.keys[k], std::move(part));
  }
  return parts;
}

bool is_homogeneous(const Grading& gr, const Element& x) { return homogeneous_parts(gr, x).size() <= 1; }

bool is_homogeneous_sublattice(const Grading& gr, const SublatticeBasis& h) {
  for (std::size_t r = 0; r < h.rank(); ++r)
    for (const auto& [g, part] : homogeneous_parts(gr, h.basis().row_vector(r)))
      if (!h.contains(part)) return false;
  return true;
}

Grading natural_grading(const GroupRing& ring) {
  const std::size_t k = ring.cyclic_factors.size();
  std::vector<IntVector> relations;
  for (std::size_t f = 0; f < k; ++f) {
    IntVector r = zero_vector(k);
    r[f] = ring.cyclic_factors[f];
    relations.push_back(std::move(r));
  }
  Presentation p = group_from_relations(k, relations);
  Grading gr;
  gr.group = p.group;
  gr.ambient_rank = ring.order.rank();
  for (std::size_t idx = 0; idx < ring.elements.size(); ++idx) {
    GroupElement g = p.group.zero();
    for (std::size_t f = 0; f < k; ++f) g = p.group.add(g, p.group.scale(p.generator_images[f], ring.elements[idx][f]));
    gr.pieces[g] = SublatticeBasis::span(gr.ambient_rank, {ring.order.basis_element(idx)});
  }
  return gr;
}

}  // namespace gradus
