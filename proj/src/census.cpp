#include "census.hpp"

#include <map>
#include <numeric>

#include "arith.hpp"
#include "errors.hpp"
#include "recovery.hpp"

namespace o2p {

namespace {

// Factorization of x read off as valuations over the primes of `base`;
// requires every prime of x to appear in base (guaranteed when x divides
// base.value).
std::vector<PrimePower> factor_over(const Natural& x, const std::vector<PrimePower>& base) {
  std::vector<PrimePower> out;
  Natural rest = x;
  for (const auto& pp : base) {
    if (rest == 1) break;
    unsigned e = 0;
    while (rest % pp.prime == 0) {
      rest /= pp.prime;
      ++e;
    }
    if (e > 0) out.push_back({pp.prime, e});
  }
  if (rest != 1) throw domain_error("value has a prime outside the expected support");
  return out;
}

// The primes over which the census sum ranges: primes of g = gcd(x, n-1)
// that do not divide x/g.
std::vector<Natural> sum_support(const Natural& x, const Semiprime& s, Natural* gcd_out,
                                 std::vector<PrimePower>* x_factors_out) {
  const FactoredInteger lambda = lambda_factored(s);
  if (x < 1 || lambda.value % x != 0) {
    throw domain_error("order must divide lambda of the modulus");
  }
  std::vector<PrimePower> x_factors = factor_over(x, lambda.factors);
  Natural g = gcd(x, s.n - 1);
  Natural quotient = x / g;

  std::vector<Natural> support;
  for (const auto& pp : factor_over(g, x_factors)) {
    if (quotient % pp.prime != 0) support.push_back(pp.prime);
  }
  *gcd_out = g;
  *x_factors_out = std::move(x_factors);
  return support;
}

}  // namespace

Natural count_order_formula(const Natural& x, const Semiprime& s) {
  Natural g;
  std::vector<PrimePower> x_factors;
  std::vector<Natural> support = sum_support(x, s, &g, &x_factors);

  // Sum of g/d over squarefree d built from the support primes.
  if (support.size() >= 63) throw resource_error("squarefree divisor sum too wide");
  Natural sum = 0;
  const uint64_t subsets = uint64_t{1} << support.size();
  for (uint64_t mask = 0; mask < subsets; ++mask) {
    Natural d(1);
    for (size_t i = 0; i < support.size(); ++i) {
      if (mask & (uint64_t{1} << i)) d *= support[i];
    }
    sum += g / d;
  }

  FactoredInteger xf{x, std::move(x_factors)};
  return totient(xf) * sum;
}

Natural count_order_product_form(const Natural& x, const Semiprime& s) {
  Natural g;
  std::vector<PrimePower> x_factors;
  std::vector<Natural> support = sum_support(x, s, &g, &x_factors);

  // g * prod (1 + 1/p) as (g / prod p) * prod (p+1); each p divides g once.
  Natural scaled = g;
  for (const Natural& p : support) scaled /= p;
  for (const Natural& p : support) scaled *= p + 1;

  FactoredInteger xf{x, std::move(x_factors)};
  return totient(xf) * scaled;
}

CensusTable census_from_formula(const Semiprime& s, uint64_t divisor_budget) {
  CensusTable table;
  table.n = s.n;
  table.phi = s.phi;
  for (const Natural& x : divisors(lambda_factored(s), divisor_budget)) {
    table.entries.push_back({x, count_order_formula(x, s)});
  }
  return table;
}

CensusTable brute_force_census(const Natural& n_in) {
  if (n_in < 2) throw domain_error("modulus must be at least 2");
  if (n_in > kBruteForceCensusCeiling) {
    throw resource_error("modulus exceeds the brute-force census ceiling");
  }
  const uint64_t n = to_uint64(n_in);

  // Walk all units in lockstep: acc[i] holds base[i]^t at the start of pass
  // t; units that reached 1 are recorded and swap-removed so later passes
  // touch only live entries. Reduction by n uses a 64-bit reciprocal.
  std::vector<uint64_t> base;
  for (uint64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) == 1) base.push_back(a);
  }
  std::vector<uint64_t> acc = base;
  const uint64_t unit_count = base.size();

  const uint64_t magic = ~uint64_t{0} / n;
  auto mulmod = [n, magic](uint64_t a, uint64_t b) {
    uint64_t x = a * b;  // n <= 10^6 keeps products under 2^40
    uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
    uint64_t r = x - q * n;
    while (r >= n) r -= n;
    return r;
  };

  std::map<uint64_t, uint64_t> counts;
  size_t alive = base.size();
  for (uint64_t t = 1; alive > 0; ++t) {
    size_t i = 0;
    while (i < alive) {
      if (acc[i] == 1) {
        ++counts[t];
        --alive;
        acc[i] = acc[alive];
        base[i] = base[alive];
      } else {
        acc[i] = mulmod(acc[i], base[i]);
        ++i;
      }
    }
  }

  CensusTable table;
  table.n = n_in;
  table.phi = Natural(static_cast<unsigned long>(unit_count));
  for (const auto& [order, count] : counts) {
    table.entries.push_back({Natural(static_cast<unsigned long>(order)),
                             Natural(static_cast<unsigned long>(count))});
  }
  return table;
}

MultiplicativityReport verify_multiplicativity(const Semiprime& s, uint64_t divisor_budget) {
  const std::vector<Natural> divs = divisors(lambda_factored(s), divisor_budget);
  std::map<Natural, Natural> counts;
  for (const Natural& x : divs) counts[x] = count_order_formula(x, s);

  MultiplicativityReport report;
  for (size_t i = 0; i < divs.size(); ++i) {
    for (size_t j = i; j < divs.size(); ++j) {
      if (gcd(divs[i], divs[j]) != 1) continue;
      ++report.pairs_checked;
      if (counts.at(divs[i] * divs[j]) != counts.at(divs[i]) * counts.at(divs[j])) {
        ++report.failures;
        report.failing_pairs.emplace_back(divs[i], divs[j]);
      }
    }
  }
  return report;
}

SuccessProfile exact_success_probability(const Semiprime& s, uint64_t divisor_budget) {
  SuccessProfile profile;
  profile.success_count = 0;
  profile.phi = s.phi;
  for (const Natural& x : divisors(lambda_factored(s), divisor_budget)) {
    if (recover_phi_from_order(s.n, x).success) {
      profile.success_count += count_order_formula(x, s);
      profile.succeeding_orders.push_back(x);
    }
  }
  profile.probability = mpq_class(profile.success_count, s.phi);
  profile.probability.canonicalize();
  return profile;
}

}  // namespace o2p
