#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace facschur {

// Exact rational in lowest terms with positive denominator. gmpxx keeps the
// canonical form after every arithmetic operation.
using Rational = mpq_class;

// "num/den" with den > 0, always including the denominator ("3/1").
std::string to_fraction_string(const Rational& q);

// Reduced display form: "3", "-3/2".
std::string to_display_string(const Rational& q);

// Accepts "p", "p/q", "-p/q"; throws ParseError on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

} // namespace facschur
