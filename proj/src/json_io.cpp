#include "gradus/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gradus/errors.hpp"

namespace gradus {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) parse_error("bad integer string '" + j.get<std::string>() + "'");
    return v;
  }
  parse_error("expected an integer, got " + j.dump());
}

Json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) parse_error(std::string(what) + " must be a non-negative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

IntVector vector_of_length(const Json& j, std::size_t n, const std::string& what) {
  IntVector v = vector_from_json(j);
  if (v.size() != n) parse_error(what + " must have length " + std::to_string(n));
  return v;
}

GroupElement group_element_from_json(const Json& j) {
  if (!j.is_array()) parse_error("group element must be an array");
  GroupElement g;
  for (const auto& x : j) {
    if (!x.is_number_integer()) parse_error("group element entries must be integers");
    g.push_back(x.get<long>());
  }
  return g;
}

}  // namespace

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) parse_error("expected an array of integers, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

Order order_from_json(const Json& j) {
  const std::size_t n = size_from_json(field(j, "rank"), "rank");
  Element one = vector_of_length(field(j, "one"), n, "one");
  const Json& t = field(j, "table");
  if (!t.is_array() || t.size() != n) parse_error("table must have " + std::to_string(n) + " rows");
  StructureConstants table(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!t[i].is_array() || t[i].size() != n) parse_error("table row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k)
      table[i].push_back(vector_of_length(t[i][k], n, "table[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array() || l.size() != n) parse_error("labels must be an array of " + std::to_string(n) + " strings");
    for (const auto& s : l) {
      if (!s.is_string()) parse_error("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return validate(std::move(table), std::move(one), n, std::move(labels));
}

Order order_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(e.what());
  }
  return order_from_json(j);
}

Json order_to_json(const Order& a) {
  Json table = Json::array();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.rank(); ++k) row.push_back(vector_to_json(a.product(i, k)));
    table.push_back(std::move(row));
  }
  Json out = {{"rank", a.rank()}, {"one", vector_to_json(a.one())}, {"table", std::move(table)}};
  if (!a.labels().empty()) out["labels"] = a.labels();
  return out;
}

Json grading_to_json(const Grading& gr) {
  Json pieces = Json::array();
  for (const auto& [g, piece] : gr.pieces) {
    Json basis = Json::array();
    for (std::size_t r = 0; r < piece.rank(); ++r) basis.push_back(vector_to_json(piece.basis().row_vector(r)));
    pieces.push_back({{"element", g}, {"basis", std::move(basis)}});
  }
  return {{"group", {{"invariant_factors", gr.group.invariant_factors()}}}, {"pieces", std::move(pieces)}};
}

Json graded_order_to_json(const GradedOrder& u) {
  Json out = grading_to_json(u.grading);
  out["generator_map"] = u.generator_map;
  Json comps = Json::array();
  for (const auto& c : u.decomposition.components) {
    Json basis = Json::array();
    for (std::size_t r = 0; r < c.rank(); ++r) basis.push_back(vector_to_json(c.basis().row_vector(r)));
    comps.push_back(std::move(basis));
  }
  out["components"] = std::move(comps);
  out["precision"] = u.precision_used;
  return out;
}

Grading grading_from_json(const Json& j, std::size_t ambient_rank) {
  Grading gr;
  gr.ambient_rank = ambient_rank;
  const Json& group = field(field(j, "group"), "invariant_factors");
  if (!group.is_array()) parse_error("invariant_factors must be an array");
  std::vector<long> factors;
  for (const auto& d : group) {
    if (!d.is_number_integer()) parse_error("invariant factors must be integers");
    factors.push_back(d.get<long>());
  }
  gr.group = FinAbGroup(factors);
  const Json& pieces = field(j, "pieces");
  if (!pieces.is_array()) parse_error("pieces must be an array");
  for (const auto& p : pieces) {
    GroupElement g = group_element_from_json(field(p, "element"));
    if (!gr.group.contains(g)) parse_error("piece label " + p.at("element").dump() + " is not a group element");
    const Json& basis = field(p, "basis");
    if (!basis.is_array()) parse_error("piece basis must be an array");
    std::vector<IntVector> rows;
    for (const auto& r : basis) rows.push_back(vector_of_length(r, ambient_rank, "piece basis vector"));
    SublatticeBasis s = SublatticeBasis::span(ambient_rank, rows);
    if (s.rank() != rows.size()) parse_error("piece basis vectors are linearly dependent");
    if (s.empty()) continue;
    if (!gr.pieces.emplace(g, std::move(s)).second) parse_error("duplicate piece " + p.at("element").dump());
  }
  return gr;
}

GramForm gram_from_json(const Json& j, const RunConfig& config) {
  const std::size_t n = size_from_json(field(j, "n"), "n");
  const Json& rows = field(j, "gram");
  if (!rows.is_array() || rows.size() != n) parse_error("gram must have " + std::to_string(n) + " rows");
  std::vector<std::vector<std::string>> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) parse_error("gram rows must have " + std::to_string(n) + " entries");
    std::vector<std::string> r;
    for (const auto& x : row) {
      if (x.is_string())
        r.push_back(x.get<std::string>());
      else if (x.is_number_integer())
        r.push_back(std::to_string(x.get<long long>()));
      else
        parse_error("gram entries must be decimal strings");
    }
    entries.push_back(std::move(r));
  }
  return GramForm::from_decimal(n, entries, config);
}

Json gram_to_json(const GramForm& g, int digits) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.n(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < g.n(); ++k) row.push_back(g(i, k).to_string(digits));
    rows.push_back(std::move(row));
  }
  return {{"n", g.n()}, {"gram", std::move(rows)}};
}

Json decomposition_to_json(const SDecomposition& d) {
  Json comps = Json::array();
  for (const auto& c : d.components) {
    Json basis = Json::array();
    for (std::size_t r = 0; r < c.rank(); ++r) basis.push_back(vector_to_json(c.basis().row_vector(r)));
    comps.push_back(std::move(basis));
  }
  return {{"n", d.ambient_rank}, {"components", std::move(comps)}};
}

Json units_to_json(const UnitGroupReport& r) {
  Json roots = Json::array();
  for (std::size_t k = 0; k < r.count; ++k)
    roots.push_back({{"element", vector_to_json(r.roots[k])}, {"order", r.orders[k]}});
  return {{"count", r.count}, {"closed", r.closed}, {"roots", std::move(roots)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gradus
