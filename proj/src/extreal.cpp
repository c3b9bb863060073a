#include "gcflab/extreal.hpp"

#include <stdexcept>

namespace gcflab {

ExtReal::ExtReal(Rational v) : value_(std::move(v)) {
  if (value_ < 0) throw std::domain_error("ExtReal requires a nonnegative value");
}

ExtReal ExtReal::infinity() {
  ExtReal x;
  x.infinite_ = true;
  return x;
}

const Rational& ExtReal::value() const {
  if (infinite_) throw std::domain_error("ExtReal: infinity has no finite value");
  return value_;
}

ExtReal operator+(const ExtReal& x, const ExtReal& y) {
  if (x.is_infinite() || y.is_infinite()) return ExtReal::infinity();
  return ExtReal(x.value() + y.value());
}

ExtReal operator*(const ExtReal& x, const ExtReal& y) {
  if (x.is_infinite() || y.is_infinite()) {
    const ExtReal& finite = x.is_infinite() ? y : x;
    if (!finite.is_infinite() && finite.value() == 0) return ExtReal(Rational(0));
    return ExtReal::infinity();
  }
  return ExtReal(x.value() * y.value());
}

ExtReal operator/(const ExtReal& x, const ExtReal& y) {
  if (y.is_infinite()) {
    if (x.is_infinite()) throw std::domain_error("ExtReal: inf/inf is undefined");
    return ExtReal(Rational(0));
  }
  if (y.value() == 0) {
    if (!x.is_infinite() && x.value() == 0) throw std::domain_error("ExtReal: 0/0 is undefined");
    return ExtReal::infinity();
  }
  if (x.is_infinite()) return ExtReal::infinity();
  return ExtReal(x.value() / y.value());
}

std::string to_string(const ExtReal& x) {
  return x.is_infinite() ? "inf" : to_string(x.value());
}

} // namespace gcflab
