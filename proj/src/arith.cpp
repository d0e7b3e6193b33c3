#include "arith.hpp"

#include "errors.hpp"

namespace o2p {

Natural parse_natural(const std::string& text) {
  if (text.empty()) throw parse_error("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') throw parse_error("not a decimal natural: '" + text + "'");
  }
  return Natural(text, 10);
}

std::string to_decimal(const Natural& value) { return value.get_str(10); }

unsigned bit_length(const Natural& value) {
  if (value == 0) return 0;
  return static_cast<unsigned>(mpz_sizeinbase(value.get_mpz_t(), 2));
}

unsigned valuation(Natural value, const Natural& prime) {
  if (value == 0 || prime < 2) throw domain_error("valuation needs value > 0 and prime >= 2");
  unsigned e = 0;
  Natural q, r;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t());
    if (r != 0) break;
    value = q;
    ++e;
  }
  return e;
}

Natural pow_uint(const Natural& base, unsigned exponent) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

uint64_t to_uint64(const Natural& value) {
  if (value < 0 || !value.fits_ulong_p()) throw domain_error("value does not fit in 64 bits");
  return static_cast<uint64_t>(value.get_ui());
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Natural lcm(const Natural& a, const Natural& b) {
  if (a == 0 && b == 0) throw domain_error("lcm(0, 0) is undefined");
  Natural out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
  if (modulus < 2) throw domain_error("mod_pow needs modulus >= 2");
  Natural out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

Natural mod_inverse(const Natural& a, const Natural& modulus) {
  if (modulus < 2) throw domain_error("mod_inverse needs modulus >= 2");
  Natural out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw domain_error("not invertible: gcd(" + to_decimal(a) + ", " + to_decimal(modulus) +
                       ") != 1");
  }
  return out;
}

SqrtResult integer_sqrt(const Natural& n) {
  if (n == 0) return {Natural(0), true};
  // Newton iteration x <- (x + n/x) / 2 starting above the root.
  Natural x = Natural(1) << ((bit_length(n) + 1) / 2);
  while (true) {
    Natural next = (x + n / x) >> 1;
    if (next >= x) break;
    x = next;
  }
  return {x, x * x == n};
}

FactorPair solve_quadratic_factors(const Natural& sum, const Natural& product) {
  if (product < 1) throw domain_error("product must be >= 1");
  Natural disc = sum * sum;
  Natural four_n = 4 * product;
  if (disc < four_n) throw no_solution_error("negative discriminant");
  disc -= four_n;
  SqrtResult s = integer_sqrt(disc);
  if (!s.exact) throw no_solution_error("discriminant is not a perfect square");
  if (((sum - s.root) & 1) != 0) throw no_solution_error("roots are not integral");
  Natural p = (sum - s.root) >> 1;
  Natural q = (sum + s.root) >> 1;
  if (p < 2) throw no_solution_error("trivial root");
  if (p * q != product) throw no_solution_error("root product mismatch");
  return {p, q};
}

}  // namespace o2p
