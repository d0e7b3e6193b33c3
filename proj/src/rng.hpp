#pragma once

#include <cstdint>

#include "natural.hpp"

namespace o2p {

// Algorithm identifier recorded with every experiment.
inline constexpr const char* kRngAlgorithm = "xoshiro256**";

// Deterministic xoshiro256** stream, state expanded from the seed with
// splitmix64. Identical across platforms, which is what makes experiment
// records replayable byte for byte.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next();

  // Uniform in [0, bound) by masked rejection; bound >= 1.
  Natural below(const Natural& bound);

  // Uniform in [lo, hi] inclusive; lo <= hi.
  Natural between(const Natural& lo, const Natural& hi);

 private:
  uint64_t state_[4];
};

uint64_t splitmix64(uint64_t& state);

// Per-trial seeds: hash(master, domain, index). Distinct domains keep the
// modulus stream and the oracle stream independent.
uint64_t derive_seed(uint64_t master, uint64_t domain, uint64_t index);

inline constexpr uint64_t kSeedDomainModulus = 1;
inline constexpr uint64_t kSeedDomainOracle = 2;

}  // namespace o2p
