#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gcflab {

// Every quantity in the library is carried exactly by these two types.
// There is no floating point outside real.hpp, which only renders
// diagnostics and never feeds back into exact computations.
using Integer = mpz_class;
using Rational = mpq_class;

Integer gcd(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& n);
Integer pow(const Integer& base, unsigned long exp);

/// num/den reduced to lowest terms with den > 0. Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);
bool is_integer(const Rational& r);

/// Accepts "3", "-4/7", "0.25", "1e-30", "2.5e3"; always exact.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

} // namespace gcflab
