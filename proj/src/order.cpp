#include "order.hpp"

#include "arith.hpp"
#include "errors.hpp"

namespace o2p {

Natural multiplicative_order(const Natural& x, const Semiprime& s) {
  Natural reduced = x % s.n;
  Natural g = gcd(reduced, s.n);
  if (g != 1) throw not_a_unit_error("element shares a factor with the modulus: " + to_decimal(g), g);

  const FactoredInteger exponent = lambda_factored(s);
  Natural t = exponent.value;
  for (const auto& pp : exponent.factors) {
    t /= pow_uint(pp.prime, pp.exponent);
    while (mod_pow(reduced, t, s.n) != 1) t *= pp.prime;
  }
  return t;
}

OrderSample sample_order(const Semiprime& s, Rng& rng) {
  OrderSample out;
  out.rejected = 0;
  while (true) {
    Natural a = rng.between(Natural(1), s.n - 1);
    if (gcd(a, s.n) != 1) {
      ++out.rejected;
      continue;
    }
    out.element = a;
    out.order = multiplicative_order(a, s);
    return out;
  }
}

Natural brute_force_order(const Natural& x, const Natural& n) {
  if (n < 2) throw domain_error("brute_force_order needs n >= 2");
  Natural reduced = x % n;
  Natural g = gcd(reduced, n);
  if (g != 1) throw not_a_unit_error("element shares a factor with the modulus: " + to_decimal(g), g);
  if (reduced == 1) return 1;

  Natural acc = reduced;
  for (uint64_t steps = 1; steps <= kBruteForceOrderCeiling; ++steps) {
    if (acc == 1) return Natural(steps);
    acc = acc * reduced % n;
  }
  throw resource_error("brute-force order exceeded step ceiling");
}

}  // namespace o2p
