#include "semiprime.hpp"

#include <algorithm>
#include <map>

#include "arith.hpp"
#include "errors.hpp"
#include "primality.hpp"
#include "rng.hpp"

namespace o2p {

namespace {

constexpr uint64_t kPrimeSearchBudget = 1u << 20;
constexpr unsigned kConstructAttempts = 1u << 16;

Natural random_prime_exact_bits(unsigned bits, Rng& rng) {
  const Natural lo = Natural(1) << (bits - 1);
  for (uint64_t i = 0; i < kPrimeSearchBudget; ++i) {
    Natural candidate = lo + rng.below(lo);
    candidate |= 1;
    if (is_prime(candidate)) return candidate;
  }
  throw resource_error("prime search budget exceeded");
}

// Random prime in [3, 2^16); the factor pool for constructed primes.
Natural random_small_prime(Rng& rng) {
  while (true) {
    Natural candidate = rng.between(Natural(3), Natural((1u << 16) - 1));
    candidate |= 1;
    if (is_prime(candidate)) return candidate;
  }
}

Natural random_prime_in(const Natural& lo, const Natural& hi, Rng& rng) {
  for (uint64_t i = 0; i < kPrimeSearchBudget; ++i) {
    Natural candidate = rng.between(lo, hi);
    if (candidate > 2 && candidate % 2 == 0) {
      candidate += 1;
      if (candidate > hi) continue;
    }
    if (is_prime(candidate)) return candidate;
  }
  throw resource_error("prime search budget exceeded");
}

// One prime p of exactly `bits` bits with p-1 = 2 * (product of recorded
// primes). Retries whole candidates until p is prime.
std::pair<Natural, FactoredInteger> construct_prime(unsigned bits, Rng& rng) {
  const Natural half_lo = Natural(1) << (bits - 2);       // lower bound for (p-1)/2
  const Natural half_hi = (Natural(1) << (bits - 1)) - 1; // upper bound for (p-1)/2
  const Natural room = half_lo >> 17;                     // keep >= 17 bits for the last factor

  for (unsigned attempt = 0; attempt < kConstructAttempts; ++attempt) {
    Natural m(1);
    std::map<Natural, unsigned> factors;
    while (m < room) {
      Natural f = random_small_prime(rng);
      m *= f;
      ++factors[f];
    }
    Natural lo = (half_lo + m - 1) / m;
    Natural hi = half_hi / m;
    if (lo > hi) continue;
    Natural last;
    try {
      last = random_prime_in(lo, hi, rng);
    } catch (const resource_error&) {
      continue;
    }
    m *= last;
    ++factors[last];

    Natural p = 2 * m + 1;
    if (!is_prime(p)) continue;

    FactoredInteger fac;
    fac.value = p - 1;
    fac.factors.push_back({Natural(2), 1});
    for (auto& [prime, exponent] : factors) fac.factors.push_back({prime, exponent});
    std::sort(fac.factors.begin(), fac.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return {p, fac};
  }
  throw resource_error("constructed-prime retry budget exceeded");
}

Semiprime assemble(Natural p, Natural q, FactoredInteger p_minus_1, FactoredInteger q_minus_1,
                   uint64_t seed) {
  if (q < p) {
    std::swap(p, q);
    std::swap(p_minus_1, q_minus_1);
  }
  Semiprime s;
  s.n = p * q;
  s.p = p;
  s.q = q;
  s.p_minus_1 = std::move(p_minus_1);
  s.q_minus_1 = std::move(q_minus_1);
  s.phi = (p - 1) * (q - 1);
  s.lambda = lcm(p - 1, q - 1);
  s.bits = bit_length(q);
  s.seed = seed;
  return s;
}

}  // namespace

Semiprime generate_semiprime(unsigned bits, uint64_t seed) {
  if (bits < kGenerateMinBits || bits > kGenerateMaxBits) {
    throw domain_error("generate_semiprime needs bits in [3, 64]");
  }
  Rng rng(seed);
  Natural p = random_prime_exact_bits(bits, rng);
  Natural q = p;
  while (q == p) q = random_prime_exact_bits(bits, rng);
  return assemble(p, q, factor_integer(p - 1), factor_integer(q - 1), seed);
}

Semiprime construct_semiprime(unsigned bits, uint64_t seed) {
  if (bits < kConstructMinBits || bits > kConstructMaxBits) {
    throw domain_error("construct_semiprime needs bits in [16, 8192]");
  }
  Rng rng(seed);
  auto [p, p_fac] = construct_prime(bits, rng);
  while (true) {
    auto [q, q_fac] = construct_prime(bits, rng);
    if (q != p) return assemble(p, q, std::move(p_fac), std::move(q_fac), seed);
  }
}

Semiprime semiprime_from_primes(const Natural& p, const Natural& q) {
  if (p == q) throw domain_error("primes must be distinct");
  if (p < 2 || q < 2 || !is_prime(p) || !is_prime(q)) throw domain_error("inputs must be prime");
  return assemble(p, q, factor_integer(p - 1), factor_integer(q - 1), 0);
}

Semiprime semiprime_from_modulus(const Natural& n) {
  if (n < 3 || n % 2 == 0) throw domain_error("modulus must be an odd semiprime");
  FactoredInteger f = factor_integer(n);
  if (f.factors.size() != 2 || f.factors[0].exponent != 1 || f.factors[1].exponent != 1) {
    throw domain_error("modulus must be the product of two distinct primes");
  }
  return semiprime_from_primes(f.factors[0].prime, f.factors[1].prime);
}

CommonStructure common_structure(const Semiprime& s) {
  CommonStructure out;
  out.p_cofactor = 1;
  out.q_cofactor = 1;

  auto it_q = s.q_minus_1.factors.begin();
  const auto end_q = s.q_minus_1.factors.end();
  std::vector<const PrimePower*> only_q;

  for (const auto& pp : s.p_minus_1.factors) {
    while (it_q != end_q && it_q->prime < pp.prime) {
      out.q_cofactor *= pow_uint(it_q->prime, it_q->exponent);
      ++it_q;
    }
    if (it_q != end_q && it_q->prime == pp.prime) {
      CommonPrime c;
      c.prime = pp.prime;
      c.exp_p = pp.exponent;
      c.exp_q = it_q->exponent;
      c.exp_min = std::min(c.exp_p, c.exp_q);
      c.exp_max = std::max(c.exp_p, c.exp_q);
      out.common.push_back(std::move(c));
      ++it_q;
    } else {
      out.p_cofactor *= pow_uint(pp.prime, pp.exponent);
    }
  }
  for (; it_q != end_q; ++it_q) out.q_cofactor *= pow_uint(it_q->prime, it_q->exponent);
  return out;
}

FactoredInteger lambda_factored(const Semiprime& s) {
  FactoredInteger out;
  out.value = s.lambda;
  auto it_p = s.p_minus_1.factors.begin();
  auto it_q = s.q_minus_1.factors.begin();
  const auto end_p = s.p_minus_1.factors.end();
  const auto end_q = s.q_minus_1.factors.end();
  while (it_p != end_p || it_q != end_q) {
    if (it_q == end_q || (it_p != end_p && it_p->prime < it_q->prime)) {
      out.factors.push_back(*it_p++);
    } else if (it_p == end_p || it_q->prime < it_p->prime) {
      out.factors.push_back(*it_q++);
    } else {
      out.factors.push_back({it_p->prime, std::max(it_p->exponent, it_q->exponent)});
      ++it_p;
      ++it_q;
    }
  }
  return out;
}

bool semiprime_consistent(const Semiprime& s) {
  if (!(s.p < s.q) || s.n != s.p * s.q) return false;
  if (!is_prime(s.p) || !is_prime(s.q)) return false;
  if (s.p_minus_1.value != s.p - 1 || s.q_minus_1.value != s.q - 1) return false;
  if (!factored_integer_consistent(s.p_minus_1)) return false;
  if (!factored_integer_consistent(s.q_minus_1)) return false;
  if (s.phi != (s.p - 1) * (s.q - 1)) return false;
  if (s.lambda != lcm(s.p - 1, s.q - 1)) return false;
  return true;
}

}  // namespace o2p
