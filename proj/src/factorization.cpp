#include "factorization.hpp"

#include <algorithm>
#include <map>

#include "arith.hpp"
#include "errors.hpp"
#include "primality.hpp"

namespace o2p {

namespace {

constexpr uint32_t kTrialBound = 1u << 16;
constexpr uint64_t kRhoIterationBudget = 1ull << 26;

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> sieve(kTrialBound, true);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < kTrialBound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j < kTrialBound; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

// Brent cycle finding; deterministic over increments c = 1, 2, 3, ...
Natural pollard_rho(const Natural& n, uint64_t& budget) {
  for (Natural c(1);; ++c) {
    Natural x(2), y(2), d(1), saved_y;
    Natural product(1);
    uint64_t power = 1, lam = 0;
    while (d == 1) {
      if (budget == 0) throw resource_error("factoring budget exceeded");
      if (lam == power) {
        x = y;
        power *= 2;
        lam = 0;
      }
      saved_y = y;
      // Batch 128 steps into one gcd.
      const uint64_t batch = std::min<uint64_t>(128, power - lam);
      for (uint64_t i = 0; i < batch && budget > 0; ++i) {
        y = (y * y + c) % n;
        Natural diff = x > y ? x - y : y - x;
        if (diff != 0) product = product * diff % n;
        --budget;
      }
      lam += batch;
      d = gcd(product, n);
    }
    if (d != n) return d;
    // Batch overshot a factor; replay one step at a time.
    y = saved_y;
    d = 1;
    while (d == 1) {
      if (budget == 0) throw resource_error("factoring budget exceeded");
      y = (y * y + c) % n;
      Natural diff = x > y ? x - y : y - x;
      d = gcd(diff, n);
      --budget;
    }
    if (d != n) return d;
    // Cycle degenerated for this increment; try the next one.
  }
}

void factor_recursive(const Natural& n, std::map<Natural, unsigned>& out, uint64_t& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Natural d = pollard_rho(n, budget);
  factor_recursive(d, out, budget);
  factor_recursive(n / d, out, budget);
}

}  // namespace

FactoredInteger factor_integer(const Natural& n) {
  if (n < 1) throw domain_error("factor_integer needs n >= 1");
  FactoredInteger result;
  result.value = n;

  std::map<Natural, unsigned> found;
  Natural rest = n;
  for (uint32_t p : small_primes()) {
    if (rest == 1) break;
    if (Natural(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) found[Natural(p)] = e;
  }
  if (rest > 1) {
    uint64_t budget = kRhoIterationBudget;
    factor_recursive(rest, found, budget);
  }

  result.factors.reserve(found.size());
  for (auto& [prime, exponent] : found) result.factors.push_back({prime, exponent});
  return result;
}

bool factored_integer_consistent(const FactoredInteger& f) {
  Natural product(1);
  const Natural* previous = nullptr;
  for (const auto& pp : f.factors) {
    if (pp.exponent == 0) return false;
    if (previous && !(*previous < pp.prime)) return false;
    if (!is_prime(pp.prime)) return false;
    product *= pow_uint(pp.prime, pp.exponent);
    previous = &pp.prime;
  }
  return product == f.value;
}

Natural totient(const FactoredInteger& f) {
  Natural out(1);
  for (const auto& pp : f.factors) {
    out *= pow_uint(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  }
  return out;
}

int moebius(const FactoredInteger& f) {
  for (const auto& pp : f.factors) {
    if (pp.exponent >= 2) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

uint64_t divisor_count(const FactoredInteger& f, uint64_t cap) {
  uint64_t count = 1;
  for (const auto& pp : f.factors) {
    count *= pp.exponent + 1;
    if (count > cap) return cap + 1;
  }
  return count;
}

std::vector<Natural> divisors(const FactoredInteger& f, uint64_t budget) {
  if (divisor_count(f, budget) > budget) throw resource_error("divisor count exceeds budget");
  std::vector<Natural> out{Natural(1)};
  for (const auto& pp : f.factors) {
    const size_t base_size = out.size();
    Natural power(1);
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (size_t i = 0; i < base_size; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace o2p
