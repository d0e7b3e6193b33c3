#include "doctest.h"

#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "order.hpp"
#include "primality.hpp"
#include "semiprime.hpp"

using namespace o2p;

TEST_CASE("multiplicative_order on known values") {
  Semiprime s = semiprime_from_primes(Natural(11), Natural(13));
  CHECK(multiplicative_order(Natural(1), s) == 1);
  CHECK(multiplicative_order(Natural(142), s) == 2);  // -1 mod 143
  CHECK(multiplicative_order(Natural(2), s) == 60);
  CHECK(multiplicative_order(Natural(12), s) == 2);   // 12^2 = 144 = 1 mod 143
  // Input is reduced modulo n first.
  CHECK(multiplicative_order(Natural(2 + 143), s) == 60);
}

TEST_CASE("multiplicative_order rejects non-units with the offending factor") {
  Semiprime s = semiprime_from_primes(Natural(11), Natural(13));
  CHECK_THROWS_AS(multiplicative_order(Natural(11), s), not_a_unit_error);
  CHECK_THROWS_AS(multiplicative_order(Natural(26), s), not_a_unit_error);
  CHECK_THROWS_AS(multiplicative_order(Natural(0), s), not_a_unit_error);
  try {
    multiplicative_order(Natural(26), s);
    FAIL("expected not_a_unit_error");
  } catch (const not_a_unit_error& e) {
    CHECK(e.factor() == 13);
  }
}

TEST_CASE("brute_force_order matches on small moduli") {
  CHECK(brute_force_order(Natural(2), Natural(143)) == 60);
  CHECK(brute_force_order(Natural(1), Natural(7)) == 1);
  CHECK(brute_force_order(Natural(3), Natural(7)) == 6);
  CHECK_THROWS_AS(brute_force_order(Natural(2), Natural(1)), domain_error);
  CHECK_THROWS_AS(brute_force_order(Natural(7), Natural(21)), not_a_unit_error);
}

TEST_CASE("order computed by exponent descent equals brute force, exhaustively") {
  // Every unit of every odd semiprime below 300.
  std::vector<Natural> primes;
  for (int i = 3; i < 150; i += 2)
    if (is_prime(Natural(i))) primes.push_back(i);

  for (size_t a = 0; a < primes.size(); ++a) {
    for (size_t b = a + 1; b < primes.size(); ++b) {
      Natural n = primes[a] * primes[b];
      if (n > 300) break;
      Semiprime s = semiprime_from_primes(primes[a], primes[b]);
      for (Natural x = 1; x < n; ++x) {
        if (gcd(x, n) != 1) continue;
        Natural fast = multiplicative_order(x, s);
        CHECK(fast == brute_force_order(x, n));
        CHECK(s.lambda % fast == 0);
        CHECK(mod_pow(x, fast, n) == 1);
      }
    }
  }
}

TEST_CASE("order computed by exponent descent equals brute force, sampled") {
  // lambda < 2^22 at these sizes, comfortably under the brute-force ceiling
  for (uint64_t seed = 0; seed < 20; ++seed) {
    unsigned bits = 8 + static_cast<unsigned>(seed % 4);
    Semiprime s = generate_semiprime(bits, seed);
    Rng rng(derive_seed(seed, kSeedDomainOracle, 0));
    for (int i = 0; i < 10; ++i) {
      OrderSample sample = sample_order(s, rng);
      CHECK(sample.order == brute_force_order(sample.element, s.n));
    }
  }
}

TEST_CASE("sample_order returns units with their exact order") {
  Semiprime s = semiprime_from_primes(Natural(11), Natural(13));
  Rng rng(42);
  uint64_t total_rejected = 0;
  for (int i = 0; i < 200; ++i) {
    OrderSample sample = sample_order(s, rng);
    CHECK(sample.element >= 1);
    CHECK(sample.element < s.n);
    CHECK(gcd(sample.element, s.n) == 1);
    CHECK(mod_pow(sample.element, sample.order, s.n) == 1);
    CHECK(s.lambda % sample.order == 0);
    total_rejected += sample.rejected;
  }
  // 22 of 142 candidates are non-units, so some rejections must show up.
  CHECK(total_rejected > 0);
}

TEST_CASE("sample_order is deterministic in the rng seed") {
  Semiprime s = generate_semiprime(16, 9);
  Rng r1(1234), r2(1234);
  for (int i = 0; i < 20; ++i) {
    OrderSample a = sample_order(s, r1);
    OrderSample b = sample_order(s, r2);
    CHECK(a.element == b.element);
    CHECK(a.order == b.order);
    CHECK(a.rejected == b.rejected);
  }
}

TEST_CASE("orders divide lambda on constructed moduli") {
  Semiprime s = construct_semiprime(96, 4);
  Rng rng(77);
  for (int i = 0; i < 25; ++i) {
    OrderSample sample = sample_order(s, rng);
    CHECK(s.lambda % sample.order == 0);
    CHECK(mod_pow(sample.element, sample.order, s.n) == 1);
    // Exactness: no proper prime quotient of the order is an exponent.
    for (const auto& pp : lambda_factored(s).factors) {
      if (sample.order % pp.prime == 0)
        CHECK(mod_pow(sample.element, sample.order / pp.prime, s.n) != 1);
    }
  }
}
