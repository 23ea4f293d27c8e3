#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cordlasso {

/// Exact rational number. All heights, weights and distances use it.
using Rational = mpq_class;

/// Parses "p", "p/q", or a decimal such as "-1.25" into an exact rational.
/// Decimals are converted with a power-of-ten denominator, so "0.1" is 1/10.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace cordlasso
