#pragma once

#include "stretchperc/common.hpp"

namespace stretchperc {

// All randomness in the project is counter-based: a draw is a pure function
// of (master seed, purpose tag, indices).  Consumers never share mutable RNG
// state, so parallel trial order cannot change any result, and a sample over
// a sub-rectangle agrees with the sample over an enclosing rectangle.

// SplitMix64 finalizer, the mixing primitive behind every stream.
constexpr u64 mix64(u64 z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr u64 hash_key(u64 seed, u64 tag) { return mix64(mix64(seed) ^ tag); }
constexpr u64 hash_key(u64 seed, u64 tag, u64 a) {
  return mix64(hash_key(seed, tag) ^ a);
}
constexpr u64 hash_key(u64 seed, u64 tag, u64 a, u64 b) {
  return mix64(hash_key(seed, tag, a) ^ b);
}
constexpr u64 hash_key(u64 seed, u64 tag, u64 a, u64 b, u64 c) {
  return mix64(hash_key(seed, tag, a, b) ^ c);
}

// Map 64 random bits to a double in the open interval (0,1).
constexpr double unit_from_bits(u64 bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Purpose tags. Two draws with different tags never collide.
namespace rng_tag {
constexpr u64 xi_x = 0x01;
constexpr u64 xi_y = 0x02;
constexpr u64 edge_h = 0x03;
constexpr u64 edge_v = 0x04;
constexpr u64 trial = 0x05;
constexpr u64 oriented_edge = 0x06;
constexpr u64 ksv_site = 0x07;
constexpr u64 rejection = 0x08;
constexpr u64 generic = 0x09;
}  // namespace rng_tag

// A sequential stream derived from (seed, tag, indices); behaves like
// SplitMix64 keyed by that tuple.
class RngStream {
 public:
  explicit RngStream(u64 key) : state_(key) {}
  RngStream(u64 seed, u64 tag) : state_(hash_key(seed, tag)) {}
  RngStream(u64 seed, u64 tag, u64 a) : state_(hash_key(seed, tag, a)) {}
  RngStream(u64 seed, u64 tag, u64 a, u64 b)
      : state_(hash_key(seed, tag, a, b)) {}

  u64 next_u64() { return mix64(state_++); }
  double next_unit() { return unit_from_bits(next_u64()); }

  // Derive an independent child stream; does not advance this stream.
  RngStream child(u64 tag, u64 index) const {
    return RngStream(hash_key(state_, tag, index));
  }

 private:
  u64 state_;
};

// One-shot uniform keyed by a coordinate tuple (used for edge/site states).
inline double keyed_unit(u64 seed, u64 tag, i64 a, i64 b) {
  return unit_from_bits(
      hash_key(seed, tag, static_cast<u64>(a), static_cast<u64>(b)));
}
inline double keyed_unit(u64 seed, u64 tag, i64 a, i64 b, i64 c) {
  return unit_from_bits(hash_key(seed, tag, static_cast<u64>(a),
                                 static_cast<u64>(b), static_cast<u64>(c)));
}

}  // namespace stretchperc
