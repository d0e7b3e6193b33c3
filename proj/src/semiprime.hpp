#pragma once

#include <cstdint>
#include <vector>

#include "factorization.hpp"
#include "natural.hpp"
#include "rng.hpp"

namespace o2p {

// An RSA-style modulus with known group structure: n = p*q with p < q both
// prime, p-1 and q-1 fully factored, phi = (p-1)(q-1), lambda = [p-1, q-1].
struct Semiprime {
  Natural n;
  Natural p;
  Natural q;
  FactoredInteger p_minus_1;
  FactoredInteger q_minus_1;
  Natural phi;
  Natural lambda;
  unsigned bits = 0;  // bit length of the larger prime
  uint64_t seed = 0;  // seed that produced it; 0 for explicit primes
};

// One shared prime of p-1 and q-1 with its exponents on each side.
struct CommonPrime {
  Natural prime;
  unsigned exp_p;    // exponent in p-1
  unsigned exp_q;    // exponent in q-1
  unsigned exp_min;  // min(exp_p, exp_q)
  unsigned exp_max;  // max(exp_p, exp_q)
};

// p-1 = (prod of common primes^exp_p) * p_cofactor and likewise for q-1,
// with gcd(p_cofactor, q_cofactor) = 1 and no common prime dividing either
// cofactor.
struct CommonStructure {
  std::vector<CommonPrime> common;
  Natural p_cofactor;
  Natural q_cofactor;
};

// Same-length moduli ceilings. generate() factors p-1 and q-1 after the
// fact, so its primes stay within desk-scale factoring reach; construct()
// knows the factorization by construction and scales to thousands of bits.
inline constexpr unsigned kGenerateMinBits = 3;
inline constexpr unsigned kGenerateMaxBits = 64;
inline constexpr unsigned kConstructMinBits = 16;
inline constexpr unsigned kConstructMaxBits = 8192;

// Uniform random primes of exactly `bits` bits, p != q, deterministic in
// the seed. Throws domain_error for bits outside [3, 64].
Semiprime generate_semiprime(unsigned bits, uint64_t seed);

// Primes of the form 2 * (product of small random primes) + 1, factorization
// recorded without any factoring step. Throws domain_error for bits outside
// [16, 8192], resource_error when the retry budget runs out.
Semiprime construct_semiprime(unsigned bits, uint64_t seed);

// Builds the full structure from explicit primes (factors p-1 and q-1).
Semiprime semiprime_from_primes(const Natural& p, const Natural& q);

// Factors n; requires n to be the product of two distinct odd primes.
Semiprime semiprime_from_modulus(const Natural& n);

CommonStructure common_structure(const Semiprime& s);

// lcm(p-1, q-1) with exponents merged from the two factorizations.
FactoredInteger lambda_factored(const Semiprime& s);

bool semiprime_consistent(const Semiprime& s);

}  // namespace o2p
