#include "gcflab/real.hpp"

namespace gcflab {

Real::Real() {
  mpfr_init2(v_, kPrecision);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, kPrecision);
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, kPrecision);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(Real other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(const Integer& n) {
  Real r;
  mpfr_set_z(r.v_, n.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const Rational& q) {
  Real r;
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::log_of(const Integer& n) {
  Real r = of(n);
  mpfr_log(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real Real::log_of(const Rational& q) {
  Real r = of(q);
  mpfr_log(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real Real::nth_root(const Integer& n, unsigned long k) {
  Real r = of(n);
  mpfr_rootn_ui(r.v_, r.v_, k, MPFR_RNDN);
  return r;
}

Real Real::infinity() {
  Real r;
  mpfr_set_inf(r.v_, 1);
  return r;
}

Real Real::operator/(const Real& rhs) const {
  Real r;
  mpfr_div(r.v_, v_, rhs.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

bool Real::is_infinite() const { return mpfr_inf_p(v_) != 0; }

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Real::str() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_signbit(v_) ? "-inf" : "inf";
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.29R*e", MPFR_RNDN, v_);
  return buf;
}

} // namespace gcflab
