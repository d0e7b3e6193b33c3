#include "recovery.hpp"

#include "errors.hpp"

namespace o2p {

namespace {

// Attach the candidate to the outcome and confirm it by factoring n.
void finish(RecoveryOutcome& out, const Natural& n, const Natural& phi_candidate) {
  out.phi = phi_candidate;
  out.trace.emplace_back("phi_candidate", phi_candidate);
  out.success = false;
  out.p = 0;
  out.q = 0;
  if (phi_candidate < 1) return;
  try {
    FactorPair split = factor_from_phi(n, phi_candidate);
    out.success = true;
    out.p = split.p;
    out.q = split.q;
  } catch (const no_solution_error&) {
  }
}

void require_modulus(const Natural& n) {
  if (n < 3) throw domain_error("modulus must be at least 3");
}

void require_positive(const Natural& v, const char* what) {
  if (v < 1) throw domain_error(std::string(what) + " must be positive");
}

}  // namespace

FactorPair factor_from_phi(const Natural& n, const Natural& phi) {
  require_modulus(n);
  require_positive(phi, "totient");
  // p + q = n + 1 - phi; p*q = n.
  return solve_quadratic_factors(n + 1 - phi, n);
}

std::pair<Natural, unsigned> coprime_fixpoint(const Natural& d, const Natural& m) {
  require_positive(d, "divisor");
  require_positive(m, "modulus");
  Natural current = d;
  unsigned steps = 0;
  while (true) {
    Natural g = gcd(current, m);
    if (g == 1) return {current, steps};
    current /= g;
    ++steps;
  }
}

RecoveryOutcome recover_phi_from_order(const Natural& n, const Natural& x) {
  require_modulus(n);
  require_positive(x, "order");
  RecoveryOutcome out;
  out.method = "order";
  out.trace.emplace_back("order", x);

  Natural shared = gcd(x, n - 1);
  out.trace.emplace_back("gcd_with_n_minus_1", shared);
  Natural divisor = x * shared;
  out.trace.emplace_back("divisor", divisor);
  Natural quotient = (n + 1) / divisor;
  out.trace.emplace_back("quotient", quotient);

  finish(out, n, quotient * divisor);
  return out;
}

RecoveryOutcome phi_from_large_divisor(const Natural& n, const Natural& d) {
  require_modulus(n);
  require_positive(d, "divisor");
  RecoveryOutcome out;
  out.method = "divisor";
  out.trace.emplace_back("divisor", d);

  Natural quotient = (n + 1) / d;
  out.trace.emplace_back("quotient", quotient);

  finish(out, n, quotient * d);
  return out;
}

RecoveryOutcome factor_from_gcd(const Natural& n, const Natural& d) {
  require_modulus(n);
  if (d < 2) throw domain_error("gcd input must be at least 2");
  RecoveryOutcome out;
  out.method = "gcd";
  out.trace.emplace_back("gcd", d);

  // Read p+q out of the base-d expansion of (n-1)/d; sound when p+q < d^2.
  Natural reduced = (n - 1) / d % d;
  out.trace.emplace_back("reduced_quotient", reduced);
  Natural prime_sum = 2 + reduced * d;
  out.trace.emplace_back("prime_sum", prime_sum);

  finish(out, n, n + 1 - prime_sum);
  return out;
}

RecoveryOutcome phi_from_ed(const Natural& n, const Natural& e, const Natural& d) {
  require_modulus(n);
  require_positive(e, "public exponent");
  require_positive(d, "private exponent");
  if (e * d < 2) throw domain_error("exponent product must exceed 1");
  RecoveryOutcome out;
  out.method = "ed";

  Natural key_product = e * d - 1;
  out.trace.emplace_back("key_product", key_product);
  Natural multiplier = key_product / n + 1;
  out.trace.emplace_back("multiplier", multiplier);

  if (key_product % multiplier != 0) {
    out.trace.emplace_back("phi_candidate", 0);
    out.success = false;
    return out;
  }
  finish(out, n, key_product / multiplier);
  return out;
}

RecoveryOutcome factor_with_cofactor_boost(const Natural& n, const Natural& d) {
  require_modulus(n);
  require_positive(d, "divisor");
  RecoveryOutcome out;
  out.method = "boost";
  out.trace.emplace_back("divisor", d);

  auto [fixpoint, steps] = coprime_fixpoint(d, n - 1);
  out.trace.emplace_back("fixpoint", fixpoint);
  out.trace.emplace_back("fixpoint_steps", steps);
  Natural cofactor = d / fixpoint;
  out.trace.emplace_back("cofactor", cofactor);
  Natural boost = gcd(cofactor, n - 1);
  out.trace.emplace_back("cofactor_gcd", boost);
  Natural boosted = d * boost;
  out.trace.emplace_back("boosted_divisor", boosted);
  Natural quotient = (n - 1) / boosted;
  out.trace.emplace_back("quotient", quotient);

  finish(out, n, quotient * boosted);
  return out;
}

}  // namespace o2p
