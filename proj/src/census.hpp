#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "factorization.hpp"
#include "natural.hpp"
#include "semiprime.hpp"

namespace o2p {

// Hard cap on the modulus for the brute-force census oracle.
inline constexpr uint64_t kBruteForceCensusCeiling = 1'000'000;

// Default cap on enumerated divisors of lambda.
inline constexpr uint64_t kDefaultDivisorBudget = 1u << 20;

struct CensusEntry {
  Natural order;  // a divisor of lambda(n)
  Natural count;  // number of units with exactly this order
};

// Full order census of the unit group mod n: counts sum to phi.
struct CensusTable {
  Natural n;
  Natural phi;
  std::vector<CensusEntry> entries;  // ascending by order
};

struct SuccessProfile {
  Natural success_count;                 // units whose order leads to recovery
  Natural phi;                           // total units
  std::vector<Natural> succeeding_orders;
  mpq_class probability;                 // success_count / phi, reduced
};

struct MultiplicativityReport {
  uint64_t pairs_checked = 0;
  uint64_t failures = 0;
  std::vector<std::pair<Natural, Natural>> failing_pairs;
  bool all_pass() const { return failures == 0; }
};

// Number of units mod s.n of order exactly x, by the explicit formula:
// phi(x) times the sum of g/d over squarefree divisors d of g = gcd(x, n-1)
// coprime to x/g. Exact integer arithmetic throughout. Throws domain_error
// when x does not divide lambda(n).
Natural count_order_formula(const Natural& x, const Semiprime& s);

// Same count through the closed product form (the Euler-product evaluation
// of the same sum); used to cross-check count_order_formula.
Natural count_order_product_form(const Natural& x, const Semiprime& s);

// Census over every divisor of lambda(n), via count_order_formula.
CensusTable census_from_formula(const Semiprime& s,
                                uint64_t divisor_budget = kDefaultDivisorBudget);

// Independent oracle: walks every unit and measures its order by repeated
// multiplication. Throws resource_error when n exceeds the ceiling.
CensusTable brute_force_census(const Natural& n);

// Checks count(x1*x2) == count(x1)*count(x2) for every coprime divisor pair
// of lambda(n).
MultiplicativityReport verify_multiplicativity(
    const Semiprime& s, uint64_t divisor_budget = kDefaultDivisorBudget);

// Runs the order-based recovery on every divisor of lambda(n) and adds up
// the census counts of the succeeding orders; probability is exact.
SuccessProfile exact_success_probability(
    const Semiprime& s, uint64_t divisor_budget = kDefaultDivisorBudget);

}  // namespace o2p
