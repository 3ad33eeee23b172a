#pragma once

#include <cstdint>

namespace spinmub::rng {

// Counter-mode SplitMix64.
//
// Every seeded operation derives one Stream from (seed, salt), where the salt
// identifies the operation kind. Draw i of the stream is a pure function of
// (seed, salt, i), so independent shots or rounds can be evaluated in any
// order (or in parallel) and reproduce the sequential results bit for bit.
//
// Operations that need several draws per logical unit (e.g. one QKD round)
// read a fixed stride of consecutive indices per unit; the stride is part of
// the operation's contract and is documented at the call site.

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

struct Stream {
  std::uint64_t base = 0;

  constexpr std::uint64_t at(std::uint64_t i) const { return mix64(base + kGamma * (i + 1)); }

  /// Draw i mapped to [0, 1) with 53-bit resolution.
  double u01(std::uint64_t i) const { return static_cast<double>(at(i) >> 11) * 0x1.0p-53; }

  /// Draw i mapped to {0, ..., n-1}. The modulo bias is below 1e-17 for the
  /// small n used here.
  std::uint64_t pick(std::uint64_t i, std::uint64_t n) const { return at(i) % n; }
};

constexpr Stream stream(std::uint64_t seed, std::uint64_t salt) {
  return Stream{mix64(seed ^ mix64(salt))};
}

// Operation salts.
inline constexpr std::uint64_t kSaltBorn = 0x626F726E'73616D70ULL;
inline constexpr std::uint64_t kSaltQkd  = 0x716B6473'69667421ULL;
inline constexpr std::uint64_t kSaltTest = 0x74657374'73747265ULL;

}  // namespace spinmub::rng
