#pragma once

#include "natural.hpp"

namespace o2p {

// gcd(0, 0) == 0 so the function is total.
Natural gcd(const Natural& a, const Natural& b);

// [a, b] = a * b / (a, b). Throws domain_error when both inputs are zero.
Natural lcm(const Natural& a, const Natural& b);

// base^exponent mod modulus. Throws domain_error when modulus < 2.
Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);

// Unique 1 <= r < modulus with a * r == 1 (mod modulus). Throws domain_error
// when modulus < 2 or gcd(a, modulus) != 1.
Natural mod_inverse(const Natural& a, const Natural& modulus);

struct SqrtResult {
  Natural root;  // floor(sqrt(n))
  bool exact;    // root * root == n
};

// Integer Newton iteration; no floating point at any size.
SqrtResult integer_sqrt(const Natural& n);

struct FactorPair {
  Natural p;  // smaller root
  Natural q;  // larger root
};

// The two roots of x^2 - sum*x + product = 0, both integral and >= 2.
// Throws no_solution_error when the discriminant is negative or not a
// perfect square, a root is non-integral, or a root is trivial (< 2).
FactorPair solve_quadratic_factors(const Natural& sum, const Natural& product);

}  // namespace o2p
