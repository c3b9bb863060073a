#pragma once

#include "gcflab/arith.hpp"
#include "gcflab/extreal.hpp"

#include <string>
#include <string_view>

namespace gcflab {

/// 2x2 integer matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  Integer a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }

  Integer det() const { return a * d - b * c; }
  bool nonnegative() const { return a >= 0 && b >= 0 && c >= 0 && d >= 0; }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
/// Entrywise lexicographic order (a, b, c, d); canonical order for state sets.
bool operator<(const Mat2& x, const Mat2& y);

/// Mobius action (a*x + b) / (c*x + d) on [0, inf]. Requires nonnegative
/// entries and nonzero determinant; maps inf to a/c. Throws
/// std::domain_error when the inf/inf (or 0/0) case is forced.
ExtReal mobius_apply(const Mat2& m, const ExtReal& x);

std::string to_string(const Mat2& m);  // [[a,b],[c,d]]
std::string to_csv(const Mat2& m);     // a,b,c,d
Mat2 mat2_from_csv(std::string_view text);

} // namespace gcflab
