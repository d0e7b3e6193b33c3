#include "doctest.h"

#include <utility>

#include "arith.hpp"
#include "errors.hpp"
#include "factorization.hpp"
#include "primality.hpp"
#include "recovery.hpp"
#include "rng.hpp"
#include "semiprime.hpp"

using namespace o2p;

namespace {

Natural traced(const RecoveryOutcome& out, const std::string& key) {
  for (const auto& [name, value] : out.trace)
    if (name == key) return value;
  FAIL("missing trace entry: ", key);
  return Natural(0);
}

void check_sound_success(const RecoveryOutcome& out, const Semiprime& s) {
  REQUIRE(out.success);
  CHECK(out.phi == s.phi);
  CHECK(out.p == s.p);
  CHECK(out.q == s.q);
}

}  // namespace

TEST_CASE("factor_from_phi splits a modulus given its exact totient") {
  FactorPair f = factor_from_phi(Natural(143), Natural(120));
  CHECK(f.p == 11);
  CHECK(f.q == 13);
  CHECK_THROWS_AS(factor_from_phi(Natural(143), Natural(140)), no_solution_error);
  CHECK_THROWS_AS(factor_from_phi(Natural(143), Natural(144)), no_solution_error);
  CHECK_THROWS_AS(factor_from_phi(Natural(143), Natural(0)), domain_error);
  CHECK_THROWS_AS(factor_from_phi(Natural(2), Natural(1)), domain_error);

  for (uint64_t seed = 0; seed < 10; ++seed) {
    Semiprime s = generate_semiprime(20, seed);
    FactorPair r = factor_from_phi(s.n, s.phi);
    CHECK(r.p == s.p);
    CHECK(r.q == s.q);
  }
}

TEST_CASE("coprime_fixpoint strips shared factors and counts steps") {
  CHECK(coprime_fixpoint(Natural(60), Natural(142)) ==
        std::pair<Natural, unsigned>(Natural(15), 2u));
  CHECK(coprime_fixpoint(Natural(36), Natural(480)) ==
        std::pair<Natural, unsigned>(Natural(1), 2u));
  CHECK(coprime_fixpoint(Natural(1), Natural(143)) ==
        std::pair<Natural, unsigned>(Natural(1), 0u));
  CHECK(coprime_fixpoint(Natural(7), Natural(10)) ==
        std::pair<Natural, unsigned>(Natural(7), 0u));
  CHECK_THROWS_AS(coprime_fixpoint(Natural(0), Natural(10)), domain_error);
  CHECK_THROWS_AS(coprime_fixpoint(Natural(10), Natural(0)), domain_error);

  // The fixpoint is coprime to m and divides d.
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    Natural d = rng.between(Natural(1), Natural(1) << 64);
    Natural m = rng.between(Natural(1), Natural(1) << 64);
    auto [fix, steps] = coprime_fixpoint(d, m);
    CHECK(gcd(fix, m) == 1);
    CHECK(d % fix == 0);
    if (steps == 0) CHECK(fix == d);
  }
}

TEST_CASE("order recovery on worked examples") {
  RecoveryOutcome out = recover_phi_from_order(Natural(143), Natural(60));
  CHECK(out.method == "order");
  CHECK(out.success);
  CHECK(out.phi == 120);
  CHECK(out.p == 11);
  CHECK(out.q == 13);
  CHECK(traced(out, "order") == 60);
  CHECK(traced(out, "gcd_with_n_minus_1") == 2);
  CHECK(traced(out, "divisor") == 120);
  CHECK(traced(out, "quotient") == 1);
  CHECK(traced(out, "phi_candidate") == 120);

  RecoveryOutcome small = recover_phi_from_order(Natural(77), Natural(30));
  CHECK(small.success);
  CHECK(small.phi == 60);
  CHECK(small.p == 7);
  CHECK(small.q == 11);
}

TEST_CASE("order recovery fails verifiably on a short order") {
  RecoveryOutcome out = recover_phi_from_order(Natural(143), Natural(2));
  CHECK_FALSE(out.success);
  CHECK(out.phi == 144);  // candidate retained for the trace
  CHECK(out.p == 0);
  CHECK(out.q == 0);
  CHECK(traced(out, "divisor") == 4);
  CHECK(traced(out, "phi_candidate") == 144);
}

TEST_CASE("order recovery preconditions") {
  CHECK_THROWS_AS(recover_phi_from_order(Natural(2), Natural(1)), domain_error);
  CHECK_THROWS_AS(recover_phi_from_order(Natural(143), Natural(0)), domain_error);
}

TEST_CASE("divisor recovery on worked examples") {
  RecoveryOutcome out = phi_from_large_divisor(Natural(481), Natural(216));
  CHECK(out.method == "divisor");
  CHECK(out.success);
  CHECK(out.phi == 432);
  CHECK(out.p == 13);
  CHECK(out.q == 37);
  CHECK(traced(out, "divisor") == 216);
  CHECK(traced(out, "quotient") == 2);

  // Too small a divisor produces a candidate that fails verification.
  RecoveryOutcome fail = phi_from_large_divisor(Natural(143), Natural(2));
  CHECK_FALSE(fail.success);
  CHECK(fail.phi == 144);
}

TEST_CASE("divisor recovery succeeds whenever the divisor beats the prime sum") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    Semiprime s = generate_semiprime(12 + static_cast<unsigned>(seed % 8), seed);
    for (const Natural& d : divisors(factor_integer(s.phi))) {
      if (d <= s.p + s.q) continue;  // hypothesis: divisor exceeds p+q
      RecoveryOutcome out = phi_from_large_divisor(s.n, d);
      check_sound_success(out, s);
    }
  }
}

TEST_CASE("gcd recovery on worked examples") {
  RecoveryOutcome out = factor_from_gcd(Natural(481), Natural(12));
  CHECK(out.method == "gcd");
  CHECK(out.success);
  CHECK(out.p == 13);
  CHECK(out.q == 37);
  CHECK(out.phi == 432);
  CHECK(traced(out, "gcd") == 12);
  CHECK(traced(out, "reduced_quotient") == 4);
  CHECK(traced(out, "prime_sum") == 50);
  CHECK(traced(out, "phi_candidate") == 432);

  RecoveryOutcome big = factor_from_gcd(Natural(1891), Natural(30));
  CHECK(big.success);
  CHECK(big.p == 31);
  CHECK(big.q == 61);

  RecoveryOutcome fail = factor_from_gcd(Natural(143), Natural(2));
  CHECK_FALSE(fail.success);
  CHECK(traced(fail, "prime_sum") == 4);

  CHECK_THROWS_AS(factor_from_gcd(Natural(143), Natural(1)), domain_error);
  CHECK_THROWS_AS(factor_from_gcd(Natural(143), Natural(0)), domain_error);
}

TEST_CASE("gcd recovery succeeds whenever p+q < gcd^2") {
  // Plant p = g*a + 1, q = g*b + 1 with gcd(a, b) = 1, so gcd(p-1, q-1)
  // is exactly g whenever no extra common factor sneaks in.
  int planted = 0;
  for (uint64_t seed = 0; planted < 40; ++seed) {
    Rng rng(seed);
    Natural g = rng.between(Natural(8), Natural(100));
    Natural a = rng.between(Natural(1), g - 2);
    Natural b = rng.between(Natural(1), g - 2);
    Natural p = g * a + 1;
    Natural q = g * b + 1;
    if (a == b || gcd(a, b) != 1) continue;
    if (!is_prime(p) || !is_prime(q)) continue;
    if (gcd(p - 1, q - 1) != g) continue;  // a or b shared a factor with g
    if (p + q >= g * g) continue;
    ++planted;
    Semiprime s = semiprime_from_primes(p, q);
    RecoveryOutcome out = factor_from_gcd(s.n, g);
    check_sound_success(out, s);
  }
}

TEST_CASE("exponent-pair recovery on worked examples") {
  RecoveryOutcome out = phi_from_ed(Natural(667), Natural(3), Natural(411));
  CHECK(out.method == "ed");
  CHECK(out.success);
  CHECK(out.phi == 616);
  CHECK(traced(out, "key_product") == 1232);
  CHECK(traced(out, "multiplier") == 2);

  RecoveryOutcome second = phi_from_ed(Natural(2173), Natural(3), Natural(1387));
  CHECK(second.success);
  CHECK(second.phi == 2080);

  RecoveryOutcome third = phi_from_ed(Natural(143), Natural(7), Natural(103));
  CHECK(third.success);
  CHECK(third.phi == 120);
  CHECK(traced(third, "key_product") == 720);
  CHECK(traced(third, "multiplier") == 6);

  // A non-inverse pair: the multiplier does not divide e*d - 1.
  RecoveryOutcome fail = phi_from_ed(Natural(143), Natural(7), Natural(104));
  CHECK_FALSE(fail.success);
  CHECK(fail.phi == 0);

  CHECK_THROWS_AS(phi_from_ed(Natural(143), Natural(1), Natural(1)), domain_error);
  CHECK_THROWS_AS(phi_from_ed(Natural(143), Natural(0), Natural(5)), domain_error);
}

TEST_CASE("exponent-pair recovery succeeds for genuine small-exponent keys") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Semiprime s = generate_semiprime(16 + static_cast<unsigned>(seed % 16), seed);
    for (Natural e : {Natural(3), Natural(5), Natural(17), Natural(65537)}) {
      if (gcd(e, s.phi) != 1) continue;
      if (9 * e * e >= 2 * s.n) continue;  // hypothesis: e < (sqrt(2)/3)*sqrt(n)
      Natural d = mod_inverse(e, s.phi);
      RecoveryOutcome out = phi_from_ed(s.n, e, d);
      check_sound_success(out, s);
    }
  }
}

TEST_CASE("cofactor boost on worked examples") {
  RecoveryOutcome out = factor_with_cofactor_boost(Natural(143), Natural(60));
  CHECK(out.method == "boost");
  CHECK(out.success);
  CHECK(out.phi == 120);
  CHECK(traced(out, "divisor") == 60);
  CHECK(traced(out, "fixpoint") == 15);
  CHECK(traced(out, "fixpoint_steps") == 2);
  CHECK(traced(out, "cofactor") == 4);
  CHECK(traced(out, "cofactor_gcd") == 2);
  CHECK(traced(out, "boosted_divisor") == 120);
  CHECK(traced(out, "quotient") == 1);

  RecoveryOutcome second = factor_with_cofactor_boost(Natural(481), Natural(36));
  CHECK(second.success);
  CHECK(second.phi == 432);
  CHECK(traced(second, "fixpoint") == 1);
  CHECK(traced(second, "boosted_divisor") == 432);

  RecoveryOutcome fail = factor_with_cofactor_boost(Natural(143), Natural(4));
  CHECK_FALSE(fail.success);
  CHECK(fail.phi == 136);
  CHECK(traced(fail, "boosted_divisor") == 8);
  CHECK(traced(fail, "quotient") == 17);
}

TEST_CASE("every verified success reports the true totient") {
  // Soundness without hypotheses: feed each method arbitrary inputs and
  // require that success implies the exact totient and factors.
  uint64_t successes = 0;
  for (uint64_t seed = 0; seed < 12; ++seed) {
    Semiprime s = generate_semiprime(10 + static_cast<unsigned>(seed % 6), seed);
    Rng rng(derive_seed(seed, 3, 0));
    std::vector<Natural> inputs;
    for (int i = 0; i < 40; ++i) inputs.push_back(rng.between(Natural(1), s.n));
    // Planted inputs that must succeed keep the success path exercised.
    inputs.push_back(s.phi);
    inputs.push_back(s.lambda);
    for (const Natural& d : inputs) {
      RecoveryOutcome a = recover_phi_from_order(s.n, d);
      RecoveryOutcome b = phi_from_large_divisor(s.n, d);
      RecoveryOutcome c = factor_with_cofactor_boost(s.n, d);
      for (const RecoveryOutcome* out : {&a, &b, &c}) {
        if (!out->success) continue;
        ++successes;
        CHECK(out->phi == s.phi);
        CHECK(out->p == s.p);
        CHECK(out->q == s.q);
      }
      if (d >= 2) {
        RecoveryOutcome g = factor_from_gcd(s.n, d);
        if (g.success) {
          ++successes;
          CHECK(g.phi == s.phi);
        }
      }
    }
  }
  CHECK(successes > 0);  // the sweep must actually exercise the success path
}

TEST_CASE("order recovery is sound across all divisors of lambda") {
  for (uint64_t seed = 0; seed < 16; ++seed) {
    Semiprime s = generate_semiprime(9 + static_cast<unsigned>(seed % 8), seed);
    for (const Natural& x : divisors(lambda_factored(s))) {
      // The boosted order divisor always divides phi.
      Natural d = x * gcd(x, s.n - 1);
      CHECK(s.phi % d == 0);
      RecoveryOutcome out = recover_phi_from_order(s.n, x);
      if (out.success) check_sound_success(out, s);
    }
  }
}
