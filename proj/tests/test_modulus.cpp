#include "doctest.h"

#include <algorithm>

#include "arith.hpp"
#include "errors.hpp"
#include "primality.hpp"
#include "semiprime.hpp"

using namespace o2p;

namespace {

Natural rebuild(const std::vector<CommonPrime>& common, bool use_p, const Natural& cofactor) {
  Natural acc = cofactor;
  for (const auto& c : common) acc *= pow_uint(c.prime, use_p ? c.exp_p : c.exp_q);
  return acc;
}

}  // namespace

TEST_CASE("semiprime_from_primes assembles the full structure") {
  Semiprime s = semiprime_from_primes(Natural(11), Natural(13));
  CHECK(s.n == 143);
  CHECK(s.p == 11);
  CHECK(s.q == 13);
  CHECK(s.phi == 120);
  CHECK(s.lambda == 60);
  CHECK(s.bits == 4);
  CHECK(s.seed == 0);
  CHECK(s.p_minus_1.value == 10);
  CHECK(s.q_minus_1.value == 12);
  CHECK(semiprime_consistent(s));

  // Order of arguments does not matter; p is always the smaller prime.
  Semiprime flipped = semiprime_from_primes(Natural(13), Natural(11));
  CHECK(flipped.p == 11);
  CHECK(flipped.q == 13);

  CHECK_THROWS_AS(semiprime_from_primes(Natural(11), Natural(11)), domain_error);
  CHECK_THROWS_AS(semiprime_from_primes(Natural(11), Natural(12)), domain_error);
  CHECK_THROWS_AS(semiprime_from_primes(Natural(1), Natural(13)), domain_error);
}

TEST_CASE("semiprime_from_modulus factors and validates") {
  Semiprime s = semiprime_from_modulus(Natural(143));
  CHECK(s.p == 11);
  CHECK(s.q == 13);
  CHECK(s.phi == 120);

  Semiprime t = semiprime_from_modulus(Natural(77));
  CHECK(t.p == 7);
  CHECK(t.q == 11);
  CHECK(t.phi == 60);
  CHECK(t.lambda == 30);

  CHECK_THROWS_AS(semiprime_from_modulus(Natural(4)), domain_error);    // p == q
  CHECK_THROWS_AS(semiprime_from_modulus(Natural(13)), domain_error);   // prime
  CHECK_THROWS_AS(semiprime_from_modulus(Natural(105)), domain_error);  // three primes
  CHECK_THROWS_AS(semiprime_from_modulus(Natural(14)), domain_error);   // even
  CHECK_THROWS_AS(semiprime_from_modulus(Natural(99)), domain_error);   // 9 * 11
}

TEST_CASE("generate_semiprime is deterministic and well-formed") {
  CHECK_THROWS_AS(generate_semiprime(2, 1), domain_error);
  CHECK_THROWS_AS(generate_semiprime(65, 1), domain_error);

  for (unsigned bits : {3u, 4u, 8u, 16u, 32u, 48u, 64u}) {
    Semiprime s = generate_semiprime(bits, 7);
    Semiprime again = generate_semiprime(bits, 7);
    CHECK(s.n == again.n);
    CHECK(s.seed == 7);
    CHECK(semiprime_consistent(s));
    CHECK(is_prime(s.p));
    CHECK(is_prime(s.q));
    CHECK(s.p < s.q);
    CHECK(bit_length(s.p) == bits);
    CHECK(bit_length(s.q) == bits);
    CHECK(s.bits == bits);
    CHECK(s.phi == (s.p - 1) * (s.q - 1));
    CHECK(s.lambda == lcm(s.p - 1, s.q - 1));
  }

  // The only 3-bit primes are 5 and 7; the only 4-bit primes are 11 and 13.
  CHECK(generate_semiprime(3, 123).n == 35);
  CHECK(generate_semiprime(4, 9).n == 143);
  CHECK(generate_semiprime(4, 1000).n == 143);

  // Different seeds explore different moduli at comfortable sizes.
  bool varied = false;
  Semiprime first = generate_semiprime(20, 0);
  for (uint64_t seed = 1; seed < 6; ++seed)
    varied = varied || (generate_semiprime(20, seed).n != first.n);
  CHECK(varied);
}

TEST_CASE("construct_semiprime records factorizations without factoring") {
  CHECK_THROWS_AS(construct_semiprime(15, 1), domain_error);
  CHECK_THROWS_AS(construct_semiprime(8193, 1), domain_error);

  for (unsigned bits : {16u, 24u, 64u, 256u}) {
    Semiprime s = construct_semiprime(bits, 5);
    Semiprime again = construct_semiprime(bits, 5);
    CHECK(s.n == again.n);
    CHECK(semiprime_consistent(s));
    CHECK(is_prime(s.p));
    CHECK(is_prime(s.q));
    CHECK(bit_length(s.p) == bits);
    CHECK(bit_length(s.q) == bits);
    CHECK(factored_integer_consistent(s.p_minus_1));
    CHECK(factored_integer_consistent(s.q_minus_1));
  }

  // Construction scales to sizes where factoring p-1 would be hopeless.
  Semiprime big = construct_semiprime(1024, 2);
  CHECK(bit_length(big.n) >= 2047);
  CHECK(semiprime_consistent(big));
}

TEST_CASE("common_structure splits shared primes from coprime cofactors") {
  Semiprime s = semiprime_from_primes(Natural(11), Natural(13));
  CommonStructure cs = common_structure(s);
  REQUIRE(cs.common.size() == 1);
  CHECK(cs.common[0].prime == 2);
  CHECK(cs.common[0].exp_p == 1);
  CHECK(cs.common[0].exp_q == 2);
  CHECK(cs.common[0].exp_min == 1);
  CHECK(cs.common[0].exp_max == 2);
  CHECK(cs.p_cofactor == 5);
  CHECK(cs.q_cofactor == 3);
}

TEST_CASE("common_structure invariants hold on random moduli") {
  for (uint64_t seed = 0; seed < 24; ++seed) {
    unsigned bits = 8 + static_cast<unsigned>(seed % 12);
    Semiprime s = generate_semiprime(bits, seed);
    CommonStructure cs = common_structure(s);

    CHECK(rebuild(cs.common, true, cs.p_cofactor) == s.p - 1);
    CHECK(rebuild(cs.common, false, cs.q_cofactor) == s.q - 1);
    CHECK(gcd(cs.p_cofactor, cs.q_cofactor) == 1);

    Natural shared_min(1), shared_max(1);
    for (const auto& c : cs.common) {
      CHECK(c.exp_p >= 1);
      CHECK(c.exp_q >= 1);
      CHECK(c.exp_min == std::min(c.exp_p, c.exp_q));
      CHECK(c.exp_max == std::max(c.exp_p, c.exp_q));
      CHECK(cs.p_cofactor % c.prime != 0);
      CHECK(cs.q_cofactor % c.prime != 0);
      shared_min *= pow_uint(c.prime, c.exp_min);
      shared_max *= pow_uint(c.prime, c.exp_max);
    }

    // lambda = (prod of shared primes at max exponent) * both cofactors;
    // gcd(p-1, q-1) = shared primes at min exponent; their product is phi.
    CHECK(s.lambda == shared_max * cs.p_cofactor * cs.q_cofactor);
    CHECK(gcd(s.p - 1, s.q - 1) == shared_min);
    CHECK(s.phi == s.lambda * shared_min);
  }
}

TEST_CASE("lambda_factored is a certified factorization of lambda") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    Semiprime s = generate_semiprime(10 + seed % 8, seed);
    FactoredInteger lf = lambda_factored(s);
    CHECK(lf.value == s.lambda);
    CHECK(factored_integer_consistent(lf));
  }
  Semiprime c = construct_semiprime(128, 3);
  FactoredInteger lf = lambda_factored(c);
  CHECK(lf.value == c.lambda);
  CHECK(factored_integer_consistent(lf));
}

TEST_CASE("semiprime_consistent rejects tampered structures") {
  Semiprime s = semiprime_from_primes(Natural(11), Natural(13));
  Semiprime bad = s;
  bad.phi = 121;
  CHECK_FALSE(semiprime_consistent(bad));
  bad = s;
  bad.lambda = 30;
  CHECK_FALSE(semiprime_consistent(bad));
  bad = s;
  bad.n = 145;
  CHECK_FALSE(semiprime_consistent(bad));
}
