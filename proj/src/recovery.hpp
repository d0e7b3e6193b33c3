#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "natural.hpp"

namespace o2p {

// Result of one recovery attempt. Every method produces a totient candidate
// (possibly wrong); `success` means the candidate was confirmed by splitting
// n into two integer factors >= 2. The trace records the intermediate values
// in the order they were computed, for inspection and serialization.
struct RecoveryOutcome {
  std::string method;
  bool success = false;
  Natural phi;  // candidate totient; authoritative only when success
  Natural p;    // factors of n when success, 0 otherwise
  Natural q;
  std::vector<std::pair<std::string, Natural>> trace;
};

// Solve for the two factors of n given its exact totient, via the quadratic
// whose roots are the factors. Throws no_solution_error when phi is not the
// totient of a product of two factors >= 2.
FactorPair factor_from_phi(const Natural& n, const Natural& phi);

// Repeatedly divide d by gcd(d, m) until the gcd is 1. Returns the fixpoint
// and the number of division steps taken (0 when d and m start coprime).
std::pair<Natural, unsigned> coprime_fixpoint(const Natural& d, const Natural& m);

// Totient recovery from the multiplicative order x of some unit mod n:
// multiply x by gcd(x, n-1) to get a divisor of the totient, then snap the
// quotient of n+1 by that divisor.
RecoveryOutcome recover_phi_from_order(const Natural& n, const Natural& x);

// Totient recovery from a known divisor d of the totient: only one multiple
// of d fits in the window that must contain the totient, provided d > p+q
// (guaranteed for d >= 2^(L+1) when both primes have at most L bits).
RecoveryOutcome phi_from_large_divisor(const Natural& n, const Natural& d);

// Factor n directly from d = gcd(p-1, q-1), valid when p+q < d^2: the base-d
// digits of (n-1)/d expose p+q.
RecoveryOutcome factor_from_gcd(const Natural& n, const Natural& d);

// Totient recovery from an RSA exponent pair: e*d - 1 is a multiple of the
// totient, and for small e the multiplier is pinned by division by n.
RecoveryOutcome phi_from_ed(const Natural& n, const Natural& e, const Natural& d);

// Boosted variant of the divisor method: strip from d its part sharing
// factors with n-1 (the coprime fixpoint), recover from the stripped
// cofactor an extra factor shared with n-1, and recover with the enlarged
// divisor against n-1.
RecoveryOutcome factor_with_cofactor_boost(const Natural& n, const Natural& d);

}  // namespace o2p
