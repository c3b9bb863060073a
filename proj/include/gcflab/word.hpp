#pragma once

#include "gcflab/arith.hpp"

#include <string>

namespace gcflab {

/// Words are finite sequences over single-character alphabets (substitution
/// letters, the {L,R} tape alphabet, and mixed symbol strings). Immutable by
/// convention: every operation returns a new word.
using Word = std::string;

Word reversed(const Word& w);
Word word_pow(const Word& w, unsigned long k);

/// w^r for rational r > 0: w repeated floor(r) times, followed by the prefix
/// of w of length ceil((r - floor(r)) * |w|).
Word fractional_power(const Word& w, const Rational& r);

} // namespace gcflab
