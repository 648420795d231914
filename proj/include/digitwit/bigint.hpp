#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace digitwit {

using Integer = mpz_class;

/// Decimal rendering, never in scientific notation.
std::string to_decimal(const Integer& n);

/// Parses a decimal integer or a power written as "m^k" (both parts decimal).
/// Throws std::invalid_argument on malformed text.
Integer parse_integer(std::string_view text);

Integer power(const Integer& base, std::uint64_t exponent);
Integer power(std::uint64_t base, std::uint64_t exponent);

/// Least nonnegative residue of n modulo m (m > 0).
Integer mod_floor(const Integer& n, const Integer& m);

/// Natural logarithm of n > 0, accurate for operands far beyond double range.
double natural_log(const Integer& n);

/// Converts to uint64_t, throwing std::overflow_error when out of range.
std::uint64_t to_u64(const Integer& n);

}  // namespace digitwit
