#include "gcflab/arith.hpp"

#include <cctype>
#include <stdexcept>

namespace gcflab {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer parse_integer(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  Integer n;
  if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad integer literal: '" + std::string(text) + "'");
  return n;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    return make_rational(num, den);
  }

  // decimal form: [sign] digits [. digits] [eE [sign] digits]
  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = (s[i++] == '-');

  std::string digits;
  long frac_len = 0, exponent = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      exponent = std::stol(std::string(s.substr(i + 1)));
      break;
    } else {
      throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");

  Integer num = parse_integer(digits);  // explicit base 10: "025" is not octal
  Integer den = 1;
  long net = exponent - frac_len;
  if (net >= 0)
    num *= pow(Integer(10), static_cast<unsigned long>(net));
  else
    den = pow(Integer(10), static_cast<unsigned long>(-net));
  if (negative) num = -num;
  return make_rational(num, den);
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace gcflab
