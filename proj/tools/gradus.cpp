// gradus: command-line front end.
//
// Order arguments are JSON files, or example:<name> for a built-in fixture.
// Exit codes: 0 ok, 2 invalid input, 3 precision exhausted, 4 enumeration
// budget exceeded, 1 anything else. Diagnostics go to stderr as
// "error: <Code>: <message>".

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gradus/embeddings.hpp"
#include "gradus/errors.hpp"
#include "gradus/fixtures.hpp"
#include "gradus/grading.hpp"
#include "gradus/json_io.hpp"
#include "gradus/lattice.hpp"
#include "gradus/units.hpp"

namespace {

using namespace gradus;

constexpr const char* kNilradicalNote =
    "input was replaced by its quotient by the nilradical; idempotents of the input correspond "
    "bijectively to those of the quotient";

struct Options {
  RunConfig config;
  std::string format;  // empty: command default
  bool mod_nilradical = false;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotCommutative:
    case ErrorCode::NotAssociative:
    case ErrorCode::BadIdentity:
    case ErrorCode::TorsionQuotient:
    case ErrorCode::NotReduced:
      return 2;
    case ErrorCode::PrecisionExhausted:
      return 3;
    case ErrorCode::EnumerationBudgetExceeded:
      return 4;
    default:
      return 1;
  }
}

Order load_order(const std::string& arg) {
  if (arg.starts_with("example:")) return example_order(arg.substr(8));
  return order_from_string(read_file(arg));
}

struct Input {
  Order order;
  bool quotiented = false;
};

// Applies --mod-nilradical when requested and the order is not reduced.
Input prepare(const std::string& arg, const Options& opt) {
  Input in{load_order(arg), false};
  if (opt.mod_nilradical && !is_reduced(in.order)) {
    SublatticeBasis n = nilradical(in.order);
    std::vector<Element> gens;
    for (std::size_t r = 0; r < n.rank(); ++r) gens.push_back(n.basis().row_vector(r));
    in.order = quotient_order(in.order, gens).order;
    in.quotiented = true;
  }
  return in;
}

bool want_json(const Options& opt, bool json_by_default) {
  return opt.format.empty() ? json_by_default : opt.format == "json";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string text(const IntVector& v) { return to_string(v); }

std::string text(const GroupElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

std::string text(const std::vector<long>& factors, bool group) {
  if (!group) return text(GroupElement(factors));
  if (factors.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + ("Z/" + std::to_string(factors[i]));
  return s;
}

int cmd_validate(const std::string& path, const Options& opt) {
  Order a = load_order(path);
  if (want_json(opt, false))
    emit({{"valid", true}, {"rank", a.rank()}});
  else
    std::cout << "ok: valid order of rank " << a.rank() << "\n";
  return 0;
}

int cmd_analyze(const std::string& path, const Options& opt) {
  Input in = prepare(path, opt);
  const Order& a = in.order;
  const bool reduced = is_reduced(a);
  const std::size_t nil_rank = nilradical(a).rank();
  Json out = {{"rank", a.rank()}, {"reduced", reduced}, {"nilradical_rank", nil_rank}};
  if (reduced && a.rank() > 0) {
    auto [g, connected, idem] = with_escalation(opt.config, [&](const RunConfig& c) {
      GramForm g = gram(compute_embeddings(a, c.precision, c.seed), c);
      bool conn = is_connected(a, g, c.enumeration_cap);
      auto ids = idempotents(a, g, c.enumeration_cap);
      return std::tuple{std::move(g), conn, ids.size()};
    });
    out["connected"] = connected;
    out["idempotents"] = idem;
    Json diag = Json::array();
    for (std::size_t i = 0; i < g.n(); ++i) diag.push_back(g(i, i).to_string(12));
    out["gram"] = {{"precision", g.precision()}, {"tau", g.tau().to_string(6)},
                   {"max_abs", g.max_abs()}, {"diagonal", std::move(diag)}};
  }
  if (in.quotiented) out["note"] = kNilradicalNote;
  if (want_json(opt, false)) {
    emit(out);
    return 0;
  }
  std::cout << "rank: " << a.rank() << "\n"
            << "reduced: " << (reduced ? "yes" : "no") << "\n"
            << "nilradical rank: " << nil_rank << "\n";
  if (out.contains("connected")) {
    std::cout << "connected: " << (out["connected"].get<bool>() ? "yes" : "no") << "\n"
              << "idempotents: " << out["idempotents"].get<std::size_t>() << "\n"
              << "gram: precision " << out["gram"]["precision"].get<long>() << " bits, tau "
              << out["gram"]["tau"].get<std::string>() << ", diagonal";
    for (const auto& d : out["gram"]["diagonal"]) std::cout << " " << d.get<std::string>();
    std::cout << "\n";
  }
  if (in.quotiented) std::cout << "note: " << kNilradicalNote << "\n";
  return 0;
}

int cmd_grade(const std::string& path, const Options& opt) {
  Input in = prepare(path, opt);
  GradedOrder u = universal_grading(in.order, opt.config);
  if (want_json(opt, true)) {
    Json out = graded_order_to_json(u);
    if (in.quotiented) out["note"] = kNilradicalNote;
    emit(out);
    return 0;
  }
  std::cout << "group: " << text(u.grading.group.invariant_factors(), true) << "\n";
  for (const auto& [g, piece] : u.grading.pieces) {
    std::cout << "piece " << text(g) << ":";
    for (std::size_t r = 0; r < piece.rank(); ++r) std::cout << " " << text(piece.basis().row_vector(r));
    std::cout << "\n";
  }
  if (in.quotiented) std::cout << "note: " << kNilradicalNote << "\n";
  return 0;
}

int cmd_units(const std::string& path, const Options& opt) {
  Input in = prepare(path, opt);
  UnitGroupReport r = roots_of_unity(in.order, opt.config);
  if (want_json(opt, true)) {
    Json out = units_to_json(r);
    if (in.quotiented) out["note"] = kNilradicalNote;
    emit(out);
    return 0;
  }
  std::cout << r.count << " roots of unity\n";
  for (std::size_t k = 0; k < r.count; ++k) std::cout << text(r.roots[k]) << " order " << r.orders[k] << "\n";
  return 0;
}

int cmd_idempotents(const std::string& path, const Options& opt) {
  Input in = prepare(path, opt);
  std::vector<Element> ids = idempotents(in.order, opt.config);
  if (want_json(opt, true)) {
    Json list = Json::array();
    for (const auto& e : ids) list.push_back(vector_to_json(e));
    Json out = {{"count", ids.size()}, {"idempotents", std::move(list)}};
    if (in.quotiented) out["note"] = kNilradicalNote;
    emit(out);
    return 0;
  }
  std::cout << ids.size() << " idempotents\n";
  for (const auto& e : ids) std::cout << text(e) << "\n";
  return 0;
}

int cmd_decompose(const std::string& path, const Options& opt) {
  const Json j = [&] {
    try {
      return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
  }();
  SDecomposition d = with_escalation(opt.config, [&](const RunConfig& c) {
    return universal_s_decomposition(gram_from_json(j, c), c.enumeration_cap);
  });
  if (want_json(opt, true)) {
    emit(decomposition_to_json(d));
    return 0;
  }
  std::cout << d.components.size() << " components\n";
  for (const auto& c : d.components) {
    for (std::size_t r = 0; r < c.rank(); ++r) std::cout << (r ? " " : "") << text(c.basis().row_vector(r));
    std::cout << "\n";
  }
  return 0;
}

int cmd_example(const std::string& name, bool list) {
  if (list || name.empty()) {
    for (const auto& n : example_names()) std::cout << n << "\n";
    return 0;
  }
  emit(order_to_json(example_order(name)));
  return 0;
}

int cmd_verify(const std::string& order_path, const std::string& grading_path, const Options& opt) {
  Order a = load_order(order_path);
  Json j;
  try {
    j = Json::parse(read_file(grading_path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  GradingReport r = verify_grading(a, grading_from_json(j, a.rank()));
  if (want_json(opt, false)) {
    emit({{"passed", r.passed()},
          {"closed_under_products", r.closed_under_products},
          {"direct_sum", r.direct_sum},
          {"identity_in_neutral", r.identity_in_neutral},
          {"neutral_is_ring", r.neutral_is_ring},
          {"failures", r.failures}});
  } else {
    std::cout << (r.passed() ? "ok: grading verified" : "grading fails verification") << "\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  }
  return r.passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal gradings, idempotents and roots of unity of orders"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options opt;
  long precision = opt.config.precision;
  std::uint64_t seed = opt.config.seed;
  std::size_t cap = opt.config.enumeration_cap;
  int escalations = opt.config.escalations;
  app.add_option("--precision", precision, "working precision in bits (>= 64)");
  app.add_option("--seed", seed, "seed for the separating element");
  app.add_option("--cap", cap, "enumeration budget (vectors)");
  app.add_option("--escalations", escalations, "precision doublings before giving up");
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--mod-nilradical", opt.mod_nilradical, "quotient a non-reduced input by its nilradical first");

  std::string path, second;
  bool list = false;
  auto* validate = app.add_subcommand("validate", "parse and validate an order");
  auto* analyze = app.add_subcommand("analyze", "rank, reducedness, nilradical, connectedness, Gram summary");
  auto* grade = app.add_subcommand("grade", "universal grading");
  auto* units = app.add_subcommand("units", "roots of unity");
  auto* idem = app.add_subcommand("idempotents", "idempotents");
  auto* decompose = app.add_subcommand("decompose", "universal orthogonal decomposition of a Gram JSON");
  auto* example = app.add_subcommand("example", "print a built-in example order");
  auto* verify = app.add_subcommand("verify", "check a grading JSON against an order");
  for (auto* sub : {validate, analyze, grade, units, idem, decompose})
    sub->add_option("input", path, "order JSON file or example:<name>")->required();
  example->add_option("name", path, "example name");
  example->add_flag("--list", list, "list example names");
  verify->add_option("order", path, "order JSON file or example:<name>")->required();
  verify->add_option("grading", second, "grading JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  opt.config.precision = precision;
  opt.config.seed = seed;
  opt.config.enumeration_cap = cap;
  opt.config.escalations = escalations;

  try {
    opt.config.check();
    if (*validate) return cmd_validate(path, opt);
    if (*analyze) return cmd_analyze(path, opt);
    if (*grade) return cmd_grade(path, opt);
    if (*units) return cmd_units(path, opt);
    if (*idem) return cmd_idempotents(path, opt);
    if (*decompose) return cmd_decompose(path, opt);
    if (*example) return cmd_example(path, list);
    if (*verify) return cmd_verify(path, second, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
