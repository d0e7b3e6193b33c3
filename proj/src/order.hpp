#pragma once

#include <cstdint>

#include "natural.hpp"
#include "rng.hpp"
#include "semiprime.hpp"

namespace o2p {

// Hard cap on brute-force order steps before giving up with resource_error.
inline constexpr uint64_t kBruteForceOrderCeiling = 10'000'000;

struct OrderSample {
  Natural element;    // sampled unit, reduced mod n
  Natural order;      // its multiplicative order
  uint64_t rejected;  // non-unit draws discarded before this one
};

// Exact multiplicative order of x modulo s.n, computed by dividing the group
// exponent down one prime at a time. Throws not_a_unit_error (carrying
// gcd(x, n)) when x is not invertible.
Natural multiplicative_order(const Natural& x, const Semiprime& s);

// Draw uniformly from [1, n-1] until a unit appears, then report its order.
OrderSample sample_order(const Semiprime& s, Rng& rng);

// Multiply x by itself until the product returns to 1, counting steps.
// Requires nothing about n beyond n >= 2; intended as an independent check
// for small inputs. Throws resource_error past kBruteForceOrderCeiling.
Natural brute_force_order(const Natural& x, const Natural& n);

}  // namespace o2p
