#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dynzsig {

/// Arbitrary-precision signed integer. GMP keeps zero canonical and the limb
/// vector free of leading zeros, which is all the invariants we rely on.
using BigInt = mpz_class;

/// Natural log of |n| for n != 0.
///
/// Computed from the leading 53-bit window and the binary exponent
/// (mpz_get_d_2exp), so the relative error is ~1e-16 regardless of size.
/// Every height in the library goes through this one primitive.
double log_abs(const BigInt& n);

/// Exact number of decimal digits of |n| (1 for zero).
std::size_t decimal_digits(const BigInt& n);

/// Cheap digit estimate, exact or one too large. Used for budget gates.
std::size_t approx_decimal_digits(const BigInt& n);

std::string to_decimal(const BigInt& n);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

BigInt abs_value(const BigInt& n);

/// Sign of |a| - |b|.
inline int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace dynzsig
