#include "gcflab/mat2.hpp"

#include <stdexcept>
#include <vector>

namespace gcflab {

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool operator<(const Mat2& x, const Mat2& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  if (x.c != y.c) return x.c < y.c;
  return x.d < y.d;
}

ExtReal mobius_apply(const Mat2& m, const ExtReal& x) {
  if (!m.nonnegative()) throw std::invalid_argument("mobius_apply: negative entry");
  if (m.det() == 0) throw std::invalid_argument("mobius_apply: singular matrix");

  if (x.is_infinite()) {
    // limit along the positive axis: a/c
    if (m.c == 0) {
      if (m.a == 0) throw std::domain_error("mobius_apply: inf/inf is undefined");
      return ExtReal::infinity();
    }
    return ExtReal(make_rational(m.a, m.c));
  }

  const Rational& v = x.value();
  Rational num = m.a * v + m.b;
  Rational den = m.c * v + m.d;
  if (den == 0) {
    if (num == 0) throw std::domain_error("mobius_apply: 0/0 is undefined");
    return ExtReal::infinity();
  }
  return ExtReal(num / den);
}

std::string to_string(const Mat2& m) {
  return "[[" + to_string(m.a) + "," + to_string(m.b) + "],[" + to_string(m.c) +
         "," + to_string(m.d) + "]]";
}

std::string to_csv(const Mat2& m) {
  return to_string(m.a) + "," + to_string(m.b) + "," + to_string(m.c) + "," +
         to_string(m.d);
}

Mat2 mat2_from_csv(std::string_view text) {
  std::vector<Integer> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    parts.push_back(parse_integer(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4)
    throw std::invalid_argument("matrix literal must have four entries: '" +
                                std::string(text) + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

} // namespace gcflab
