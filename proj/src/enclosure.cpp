#include "rigid1d/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rigid1d {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }
}  // namespace

Enclosure::Enclosure(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo <= hi)) throw std::invalid_argument("Enclosure: lo > hi");
}

Enclosure Enclosure::of(const Rational& q) {
  // mpq get_d truncates toward zero; one ulp either side covers it.
  const double v = q.get_d();
  if (Rational(v) == q) return Enclosure(v);
  return Enclosure(down(v), up(v));
}

Enclosure Enclosure::sqrt_of(std::int64_t n) {
  const double r = std::sqrt(static_cast<double>(n));
  return Enclosure(down(r), up(r));
}

Enclosure Enclosure::of(const QuadVal& v) {
  Enclosure e = of(v.rational_part());
  if (!v.is_rational()) e = e + of(v.radical_coeff()) * sqrt_of(v.radicand());
  return e;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  return Enclosure(down(a.lo_ + b.lo_), up(a.hi_ + b.hi_));
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  return Enclosure(down(a.lo_ - b.hi_), up(a.hi_ - b.lo_));
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const double p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return Enclosure(down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4)));
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.lo_ <= 0.0 && b.hi_ >= 0.0) throw std::domain_error("Enclosure: division by an enclosure of zero");
  const double p[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
  return Enclosure(down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4)));
}

Enclosure Enclosure::abs() const {
  if (lo_ >= 0) return *this;
  if (hi_ <= 0) return -*this;
  return Enclosure(0.0, std::max(-lo_, hi_));
}

Enclosure Enclosure::pow(unsigned n) const {
  Enclosure r(1.0);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

int Enclosure::certain_sign() const {
  if (lo_ > 0) return 1;
  if (hi_ < 0) return -1;
  return 0;
}

std::string Enclosure::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "[" << lo_ << ", " << hi_ << "]";
  return os.str();
}

}  // namespace rigid1d
