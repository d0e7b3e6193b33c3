#include "primality.hpp"

#include <array>

#include "arith.hpp"
#include "errors.hpp"

namespace o2p {

namespace {

// First 64 primes; the leading 12 are the deterministic witness set for
// n < 2^64 (Sorenson & Webster).
constexpr std::array<unsigned, 64> kBases = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,  53,
    59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
    227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

bool miller_rabin_round(const Natural& n, const Natural& n_minus_1, const Natural& odd_part,
                        unsigned two_exp, const Natural& base) {
  Natural x = mod_pow(base, odd_part, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned i = 1; i < two_exp; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 313 * 313) return true;

  Natural n_minus_1 = n - 1;
  unsigned two_exp = valuation(n_minus_1, 2);
  Natural odd_part = n_minus_1 >> two_exp;

  const bool small = n.fits_ulong_p();
  const unsigned rounds = small ? 12 : kMillerRabinRounds;
  for (unsigned i = 0; i < rounds; ++i) {
    if (!miller_rabin_round(n, n_minus_1, odd_part, two_exp, Natural(kBases[i]))) return false;
  }
  return true;
}

}  // namespace o2p
