#pragma once

#include "natural.hpp"

namespace o2p {

// Miller-Rabin. Below 2^64 the deterministic 12-base set {2..37} makes the
// answer exact; above it, 64 rounds with the first 64 primes as bases.
bool is_prime(const Natural& n);

inline constexpr unsigned kMillerRabinRounds = 64;

}  // namespace o2p
