#pragma once

#include "gcflab/arith.hpp"

#include <mpfr.h>

#include <string>

namespace gcflab {

/// 256-bit real scratch value for diagnostic columns: logarithms, roots and
/// 30-significant-digit decimal rendering. Results are presentation-only and
/// never feed back into the exact computations.
class Real {
public:
  Real();
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(Real other) noexcept;
  ~Real();

  static Real of(const Integer& n);
  static Real of(const Rational& r);
  static Real log_of(const Integer& n);
  static Real log_of(const Rational& r);
  /// n-th root of a nonnegative integer.
  static Real nth_root(const Integer& n, unsigned long k);
  static Real infinity();

  Real operator/(const Real& rhs) const;
  Real operator-() const;

  bool is_infinite() const;
  double to_double() const;

  /// Scientific notation, 30 significant digits, round-half-even.
  std::string str() const;

private:
  static constexpr mpfr_prec_t kPrecision = 256;
  mpfr_t v_;
};

} // namespace gcflab
