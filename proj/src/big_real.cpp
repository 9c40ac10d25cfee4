#include "rigid1d/big_real.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace rigid1d {

void ensure_wide_exponent_range() {
  static std::once_flag once;
  std::call_once(once, [] {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
  });
}

BigReal::BigReal(mpfr_prec_t prec) {
  ensure_wide_exponent_range();
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(double v, mpfr_prec_t prec) {
  ensure_wide_exponent_range();
  mpfr_init2(value_, std::max<mpfr_prec_t>(prec, 53));
  mpfr_set_d(value_, v, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(value_, o.precision());
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(value_, o.precision());
  mpfr_swap(value_, o.value_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(value_, o.precision());
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  mpfr_swap(value_, o.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::from_rational(const Rational& q, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_set_q(r.value_, q.get_mpq_t(), rnd);
  return r;
}

BigReal BigReal::from_quad(const QuadVal& v, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigReal r = from_rational(v.rational_part(), rnd, prec);
  if (v.is_rational()) return r;
  const Rational& y = v.radical_coeff();
  // y*sqrt(d) rounded in direction rnd: pick the sqrt bound matching sign(y).
  const mpfr_rnd_t root_rnd = (y > 0) == (rnd == MPFR_RNDU) ? MPFR_RNDU : MPFR_RNDD;
  BigReal root(prec);
  mpfr_set_si(root.value_, static_cast<long>(v.radicand()), MPFR_RNDN);
  mpfr_sqrt(root.value_, root.value_, root_rnd);
  mpfr_mul_q(root.value_, root.value_, y.get_mpq_t(), rnd);
  mpfr_add(r.value_, r.value_, root.value_, rnd);
  return r;
}

BigReal BigReal::pi(mpfr_rnd_t rnd, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_pi(r.value_, rnd);
  return r;
}

std::string BigReal::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data());
}

namespace {
mpfr_prec_t joint(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(joint(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(joint(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(joint(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(joint(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace rigid1d
