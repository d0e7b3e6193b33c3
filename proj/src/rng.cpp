#include "rng.hpp"

#include <vector>

#include "errors.hpp"

namespace o2p {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t master, uint64_t domain, uint64_t index) {
  uint64_t s = master;
  uint64_t a = splitmix64(s);
  s ^= domain * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull;
  uint64_t b = splitmix64(s);
  s ^= index * 0x9e3779b97f4a7c15ull + 1;
  uint64_t c = splitmix64(s);
  return a ^ (b + (c << 1));
}

namespace {
inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Rng::Rng(uint64_t seed) {
  uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

uint64_t Rng::next() {
  const uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

Natural Rng::below(const Natural& bound) {
  if (bound < 1) throw domain_error("Rng::below needs bound >= 1");
  if (bound == 1) return Natural(0);
  const unsigned bits = bit_length(bound);
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - 64 * (words - 1);
  const uint64_t top_mask = top_bits == 64 ? ~0ull : ((1ull << top_bits) - 1);
  std::vector<uint64_t> buf(words);
  Natural candidate;
  while (true) {
    for (unsigned i = 0; i < words; ++i) buf[i] = next();
    buf[words - 1] &= top_mask;
    // Least significant word first, native endian within words.
    mpz_import(candidate.get_mpz_t(), words, -1, sizeof(uint64_t), 0, 0, buf.data());
    if (candidate < bound) return candidate;
  }
}

Natural Rng::between(const Natural& lo, const Natural& hi) {
  if (lo > hi) throw domain_error("Rng::between needs lo <= hi");
  return lo + below(hi - lo + 1);
}

}  // namespace o2p
