#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dcorr {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws UsageError on malformed input or q = 0.
BigRational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const BigRational& value);

/// value^e for any integer e; e < 0 requires value != 0.
BigRational power(const BigRational& value, long e);

}  // namespace dcorr
