#pragma once

/// @file big_real.hpp
/// Thin RAII wrapper over MPFR with a huge exponent range.
///
/// Orbit points of x -> x^3 leave the double range after a handful of letters,
/// and e^{-1/x^2} underflows doubles for |x| < 0.04; both live here instead.

#include <mpfr.h>

#include <string>

#include "rigid1d/quad.hpp"

namespace rigid1d {

/// Widens MPFR's exponent range to the maximum. Idempotent; call before threading.
void ensure_wide_exponent_range();

class BigReal {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  explicit BigReal(mpfr_prec_t prec = kDefaultPrecision);
  BigReal(double v, mpfr_prec_t prec = kDefaultPrecision);  // NOLINT(google-explicit-constructor)
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  static BigReal from_rational(const Rational& q, mpfr_rnd_t rnd, mpfr_prec_t prec = kDefaultPrecision);
  /// x + y*sqrt(d) rounded toward -inf (rnd = MPFR_RNDD) or +inf (MPFR_RNDU); a rigorous bound.
  static BigReal from_quad(const QuadVal& v, mpfr_rnd_t rnd, mpfr_prec_t prec = kDefaultPrecision);
  static BigReal pi(mpfr_rnd_t rnd, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  std::string to_string(int digits = 20) const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  BigReal operator-() const;

  friend int compare(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.value_, b.value_); }
  friend bool operator<(const BigReal& a, const BigReal& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return compare(a, b) > 0; }
  friend bool operator==(const BigReal& a, const BigReal& b) { return compare(a, b) == 0; }

 private:
  mpfr_t value_;
};

BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sqrt(const BigReal& x);

}  // namespace rigid1d
