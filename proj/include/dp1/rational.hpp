#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace dp1 {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den, canonicalized (reduced, positive denominator).
Rational make_rational(long num, long den = 1);
Rational make_rational(Integer const& num, Integer const& den);

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational rational_from_string(std::string const& s);

std::string to_string(Rational const& q);
std::string to_string(Integer const& z);

bool is_integer(Rational const& q);

bool is_perfect_square(Integer const& z);

// Exact square root when q is a square in Q.
std::optional<Rational> rational_sqrt(Rational const& q);

// Nearest integer to p/n for n > 0 (ties round toward +infinity).
Integer nearest_integer(Integer const& p, Integer const& n);

}  // namespace dp1
