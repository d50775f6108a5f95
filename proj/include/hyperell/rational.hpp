#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperell {

// Exact arithmetic backend. Discriminants, twists and hypergeometric
// parameters are stored as exact rationals; doubles appear only at the
// point where a formula is actually evaluated numerically.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", "p", or "-p/q". Throws std::invalid_argument on malformed
// input or zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" when the denominator is not 1, "p" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// True iff q is an integer <= 0 (a pole of the gamma function at q+... etc.).
bool is_nonpositive_integer(const Rational& q);

bool is_integer(const Rational& q);

} // namespace hyperell
