#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fusion_sos {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Scalar rational(long num, long den = 1);

/// Parses "P/Q" or an integer string. Anything else, including a zero
/// denominator or embedded whitespace, throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// "P/Q", or "P" for integers.
std::string to_string(const Scalar& x);

bool is_integer(const Scalar& x);

/// Requires is_integer(x) and a value that fits in long.
long to_long(const Scalar& x);

double to_double(const Scalar& x);

Scalar binomial(long n, long k);

}  // namespace fusion_sos
