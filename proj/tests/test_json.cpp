#include "doctest.h"
#include "gradus/errors.hpp"
#include "gradus/fixtures.hpp"
#include "gradus/json_io.hpp"

using namespace gradus;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    order_from_string(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("orders round-trip through JSON") {
  for (const auto& name : example_names()) {
    Order a = example_order(name);
    CHECK(order_from_json(order_to_json(a)) == a);
    CHECK(order_from_string(order_to_json(a).dump()) == a);
  }
}

TEST_CASE("order JSON errors") {
  CHECK(parse_code("[1, 2") == ErrorCode::Parse);
  CHECK(parse_code(R"({"one": [1]})") == ErrorCode::Parse);
  CHECK(parse_code(R"({"rank": 1, "one": [1], "table": [[[1, 0]]]})") == ErrorCode::Parse);
  CHECK(parse_code(R"({"rank": 1, "one": [1], "table": [[["x"]]]})") == ErrorCode::Parse);
  CHECK(parse_code(R"({"rank": 1, "one": [2], "table": [[[1]]]})") == ErrorCode::BadIdentity);
  // Big integers may be strings.
  Order z = order_from_string(R"({"rank": 1, "one": ["1"], "table": [[["1"]]]})");
  CHECK(z.rank() == 1);
}

TEST_CASE("gradings round-trip through JSON") {
  GroupRing r = group_ring({2, 2});
  Grading g = natural_grading(r);
  CHECK(grading_from_json(grading_to_json(g), 4) == g);
  Json bad = grading_to_json(g);
  bad["pieces"][0]["element"] = Json::array({5, 0});
  CHECK_THROWS_AS(grading_from_json(bad, 4), Error);
}

TEST_CASE("Gram JSON uses decimal strings") {
  RunConfig c;
  GramForm g = gram_from_json(Json::parse(R"({"n": 2, "gram": [["2", "0.5"], ["0.5", "1.25"]]})"), c);
  CHECK(g(0, 1).to_double() == 0.5);
  GramForm back = gram_from_json(gram_to_json(g), c);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(back.is_zero(back(i, j) - g(i, j)));
}
