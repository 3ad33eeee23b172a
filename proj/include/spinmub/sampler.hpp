#pragma once

#include <cstdint>
#include <vector>

#include "spinmub/mub.hpp"
#include "spinmub/types.hpp"

namespace spinmub {

/// Kernel selection. The parallel path partitions shots across OpenMP
/// threads; because draw i depends only on (seed, salt, i) the counts are
/// bit-identical to the serial path for every thread count.
enum class Exec { serial, parallel };

/// Measurement record: outcomes[k] shots landed on basis vector k;
/// sum(outcomes) == shots.
struct Counts {
  long long shots = 0;
  std::vector<long long> outcomes;
  std::uint64_t seed = 0;
};

/// Ideal projective measurement: shots i.i.d. draws with probabilities
/// |<basis_k|state>|^2, deterministic given seed. Stream rule: one stream
/// from (seed, kSaltBorn); shot i consumes draw i.
Counts born_sample(const StateVector& state, const Basis& basis, long long shots,
                   std::uint64_t seed, Exec exec = Exec::parallel);

/// Same sampling kernel on an explicit distribution (normalized internally).
Counts sample_distribution(const std::vector<double>& probs, long long shots,
                           std::uint64_t seed, std::uint64_t salt,
                           Exec exec = Exec::parallel);

}  // namespace spinmub
