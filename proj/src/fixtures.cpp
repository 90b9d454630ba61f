#include "gradus/fixtures.hpp"

#include <charconv>

#include "gradus/errors.hpp"
#include "gradus/fixture_data.hpp"
#include "gradus/json_io.hpp"

namespace gradus {

namespace {

std::optional<long> parse_long(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// "c4xc2xc2" -> {4, 2, 2}
std::optional<std::vector<long>> parse_cyclic_factors(std::string_view s) {
  std::vector<long> factors;
  while (!s.empty()) {
    if (s.front() != 'c') return std::nullopt;
    s.remove_prefix(1);
    const std::size_t cut = s.find('x');
    auto k = parse_long(s.substr(0, cut));
    if (!k || *k < 1 || *k > 4096) return std::nullopt;
    factors.push_back(*k);
    if (cut == std::string_view::npos) break;
    s.remove_prefix(cut + 1);
    if (s.empty()) return std::nullopt;
  }
  if (factors.empty()) return std::nullopt;
  return factors;
}

Order quadratic(long d) { return monogenic_order({-d, 0, 1}); }

}  // namespace

Order example_order(std::string_view name) {
  if (name == "z") return monogenic_order({0, 1});
  if (name == "zxz") return product_order(monogenic_order({0, 1}), monogenic_order({0, 1}));
  if (name == "zi") return quadratic(-1);
  if (name == "zgolden") return monogenic_order({-1, -1, 1});
  if (name == "zeps") return monogenic_order({0, 0, 1});
  if (name == "zeta5") {
    GroupRing r = group_ring({5});
    return quotient_order(r.order, {Element(5, 1)}).order;
  }
  if (name == "zeta3cbrt2") return tensor_order(monogenic_order({1, 1, 1}), monogenic_order({-2, 0, 0, 1}));
  if (name == "parity5") return order_from_string(fixture_data::kParity5);
  if (name.starts_with("zsqrtm")) {
    if (auto d = parse_long(name.substr(6)); d && *d > 0) return quadratic(-*d);
  } else if (name.starts_with("zsqrt")) {
    if (auto d = parse_long(name.substr(5)); d && *d != 0) return quadratic(*d);
  } else if (name.starts_with("z")) {
    if (auto f = parse_cyclic_factors(name.substr(1))) return group_ring(*f).order;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown example '" + std::string(name) + "'");
}

std::vector<std::string> example_names() {
  return {"z",     "zxz",   "zc2",     "zc3",     "zc4",  "zc6",        "zc2xc2", "zsqrt2",
          "zi",    "zsqrt5", "zgolden", "zeta5",   "parity5", "zeta3cbrt2", "zeps"};
}

}  // namespace gradus
