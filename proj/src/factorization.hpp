#pragma once

#include <cstdint>
#include <vector>

#include "natural.hpp"

namespace o2p {

struct PrimePower {
  Natural prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

// A positive integer with its complete factorization. Primes are strictly
// increasing and each entry is certified prime.
struct FactoredInteger {
  Natural value;
  std::vector<PrimePower> factors;  // empty for value == 1

  bool operator==(const FactoredInteger&) const = default;
};

// Trial division to 2^16, then Brent's variant of Pollard rho. Reaches
// inputs to roughly 2^80 within the iteration budget; beyond that throws
// resource_error.
FactoredInteger factor_integer(const Natural& n);

// Rebuilds value from the factor list and checks the invariants.
bool factored_integer_consistent(const FactoredInteger& f);

// Euler phi from a factorization.
Natural totient(const FactoredInteger& f);

// 0 when any exponent >= 2, else (-1)^(number of primes).
int moebius(const FactoredInteger& f);

// All divisors in ascending order. Throws resource_error when the divisor
// count exceeds the budget.
std::vector<Natural> divisors(const FactoredInteger& f, uint64_t budget = 1u << 20);

uint64_t divisor_count(const FactoredInteger& f, uint64_t cap);

}  // namespace o2p
