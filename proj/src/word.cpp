#include "gcflab/word.hpp"

#include <stdexcept>

namespace gcflab {

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word word_pow(const Word& w, unsigned long k) {
  Word r;
  r.reserve(w.size() * k);
  for (unsigned long i = 0; i < k; ++i) r += w;
  return r;
}

Word fractional_power(const Word& w, const Rational& r) {
  if (r <= 0) throw std::invalid_argument("fractional_power: exponent must be positive");

  Integer whole = floor_of(r);
  if (!mpz_fits_ulong_p(whole.get_mpz_t()))
    throw std::length_error("fractional_power: exponent too large");
  Word result = word_pow(w, mpz_get_ui(whole.get_mpz_t()));

  Rational frac = r - Rational(whole);
  if (frac != 0 && !w.empty()) {
    Integer extra = ceil_of(frac * Integer(static_cast<unsigned long>(w.size())));
    // frac < 1 forces 1 <= extra <= |w|; anything else would wrap around w.
    if (extra < 1 || extra > Integer(static_cast<unsigned long>(w.size())))
      throw std::invalid_argument("fractional_power: fractional prefix exceeds |w|");
    result += w.substr(0, mpz_get_ui(extra.get_mpz_t()));
  }
  return result;
}

} // namespace gcflab
