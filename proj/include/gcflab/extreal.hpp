#pragma once

#include "gcflab/arith.hpp"

#include <string>

namespace gcflab {

/// A point of [0, inf]: a nonnegative rational or the value at infinity.
///
/// Arithmetic conventions: a + inf = inf, a * inf = inf for a > 0,
/// 0 * inf = 0, a / inf = 0 for finite a, x / 0 = inf for x > 0.
/// inf/inf and 0/0 are domain errors, not values.
class ExtReal {
public:
  ExtReal() : value_(0) {}
  ExtReal(Rational v);  // NOLINT(google-explicit-constructor): numeric lift
  ExtReal(long v) : ExtReal(Rational(v)) {}
  static ExtReal infinity();

  bool is_infinite() const { return infinite_; }
  /// Finite value; throws std::domain_error when infinite.
  const Rational& value() const;

  friend bool operator==(const ExtReal& x, const ExtReal& y) {
    return x.infinite_ == y.infinite_ && (x.infinite_ || x.value_ == y.value_);
  }

private:
  bool infinite_ = false;
  Rational value_;
};

ExtReal operator+(const ExtReal& x, const ExtReal& y);
ExtReal operator*(const ExtReal& x, const ExtReal& y);
ExtReal operator/(const ExtReal& x, const ExtReal& y);

std::string to_string(const ExtReal& x);

} // namespace gcflab
