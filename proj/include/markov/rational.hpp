#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace markov {

using Rational = mpq_class;

// Accepts "p/q" or a bare integer, optional leading sign. Throws
// Error(Config) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

std::size_t denominator_bits(const Rational& q);

// Smallest dyadic k / 2^bits that is >= v (v finite, nonnegative not required).
Rational dyadic_ceil(double v, unsigned bits);
Rational dyadic_floor(double v, unsigned bits);

}  // namespace markov
