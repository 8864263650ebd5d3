#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cheby {

// Exact arithmetic everywhere: coordinates, side lengths, breakpoints and
// densities are rationals in lowest terms with positive denominator
// (mpq_class keeps that invariant for canonical operands).
using Rational = mpq_class;
using Integer = mpz_class;

// Builds a canonical rational from integer numerator/denominator.
Rational make_rational(long num, long den = 1);

// Parses "p", "-p", "p/q" with arbitrary-precision integers.
// Throws Error{ParseError} on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" when the denominator is not 1, plain "p" otherwise.
std::string to_string(const Rational& r);

Rational abs_rational(const Rational& r);

// x reduced into [0, period); period must be positive.
Rational mod_rational(const Rational& x, const Rational& period);

// floor(x) as an arbitrary-precision integer.
Integer floor_rational(const Rational& x);

// Least common multiple of the denominators of a list of rationals (>= 1).
Integer denominator_lcm(const std::vector<Rational>& values);

bool is_integral(const Rational& r);

// Exact conversion to int64; throws Error{Overflow} if out of range or
// not integral.
std::int64_t to_int64(const Rational& r);
std::int64_t to_int64(const Integer& z);

}  // namespace cheby
