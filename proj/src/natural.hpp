#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace o2p {

// Arbitrary-precision non-negative integer. All operations in this library
// keep values >= 0; parsing rejects signs, and division is floor division
// (identical to GMP's truncation on non-negative operands).
using Natural = mpz_class;

// Parses a decimal string. Throws parse_error on anything but [0-9]+.
Natural parse_natural(const std::string& text);

std::string to_decimal(const Natural& value);

// Number of bits in the binary representation; bit_length(0) == 0.
unsigned bit_length(const Natural& value);

// Largest e with prime^e | value (value > 0, prime >= 2).
unsigned valuation(Natural value, const Natural& prime);

Natural pow_uint(const Natural& base, unsigned exponent);

uint64_t to_uint64(const Natural& value);  // throws domain_error if it does not fit

}  // namespace o2p
