#pragma once

// JSON encodings shared by the CLI and the tests.
//
//   order:    {"rank": n, "one": [..], "table": [[[..]..]..], "labels": [..]}
//   grading:  {"group": {"invariant_factors": [..]},
//              "pieces": [{"element": [..], "basis": [[..]..]}..],
//              "generator_map": [[..]..]}
//   gram:     {"n": k, "gram": [["decimal", ..]..]}
//
// Integers may be JSON numbers or decimal strings.

#include <string>

#include "json.hpp"

#include "gradus/embeddings.hpp"
#include "gradus/grading.hpp"
#include "gradus/lattice.hpp"
#include "gradus/order.hpp"
#include "gradus/units.hpp"

namespace gradus {

using Json = nlohmann::ordered_json;

// Parse errors throw Parse; table violations throw the validation codes.
Order order_from_json(const Json& j);
Order order_from_string(const std::string& text);
Json order_to_json(const Order& a);

Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

Json grading_to_json(const Grading& gr);
Json graded_order_to_json(const GradedOrder& u);
Grading grading_from_json(const Json& j, std::size_t ambient_rank);

GramForm gram_from_json(const Json& j, const RunConfig& config);
Json gram_to_json(const GramForm& g, int digits = 0);

Json decomposition_to_json(const SDecomposition& d);
Json units_to_json(const UnitGroupReport& r);

// Reads a whole file, throwing Parse if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace gradus
