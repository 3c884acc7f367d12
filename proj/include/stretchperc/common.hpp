#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace stretchperc {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Error taxonomy. The CLI maps these onto exit codes: schema_error -> 2,
// resource_error -> 3, anything else that escapes -> 1.
struct schema_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct window_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct geometry_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct alignment_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct conditioning_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Floor division, correct for negative numerators.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  i64 r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Integer power with overflow check.
inline i64 ipow(i64 base, int exp) {
  i64 out = 1;
  for (int e = 0; e < exp; ++e) {
    if (base != 0 && out > std::numeric_limits<i64>::max() / base) {
      throw resource_error("ipow: " + std::to_string(base) + "^" +
                           std::to_string(exp) + " overflows 64-bit range");
    }
    out *= base;
  }
  return out;
}

}  // namespace stretchperc
