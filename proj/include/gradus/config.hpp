#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "gradus/errors.hpp"

namespace gradus {

enum class OutputFormat { Text, Json };

struct RunConfig {
  long precision = 192;              // working precision in bits
  int tolerance_divisor = 3;         // tau = 2^(-precision / divisor) * max|G|
  int ambiguity_bits = 16;           // width of the band [tau, 2^bits * tau]
  std::size_t enumeration_cap = 1'000'000;
  std::uint64_t seed = 1;
  int escalations = 4;               // precision doublings before giving up
  OutputFormat format = OutputFormat::Text;

  void check() const {
    if (precision < 64) throw Error(ErrorCode::InvalidArgument, "precision must be at least 64 bits");
    if (enumeration_cap < 1) throw Error(ErrorCode::InvalidArgument, "enumeration cap must be positive");
    if (tolerance_divisor < 2) throw Error(ErrorCode::InvalidArgument, "tolerance divisor must be >= 2");
    if (escalations < 0) throw Error(ErrorCode::InvalidArgument, "escalation budget must be >= 0");
  }

  RunConfig at_precision(long bits) const {
    RunConfig c = *this;
    c.precision = bits;
    return c;
  }
};

// Runs fn(config) at the configured precision and, on failures a higher
// precision may cure, again at doubled precision up to config.escalations
// times. Throws PrecisionExhausted when the budget runs out.
template <class Fn>
auto with_escalation(const RunConfig& config, Fn&& fn) -> decltype(fn(config)) {
  config.check();
  long bits = config.precision;
  std::string last;
  for (int attempt = 0; attempt <= config.escalations; ++attempt, bits *= 2) {
    try {
      return fn(config.at_precision(bits));
    } catch (const Error& e) {
      if (!is_numeric_failure(e.code())) throw;
      last = e.what();
    }
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "no stable result up to " + std::to_string(bits / 2) + " bits: " + last);
}

}  // namespace gradus
