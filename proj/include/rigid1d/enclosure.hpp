#pragma once

/// @file enclosure.hpp
/// Certified double-precision interval enclosures.
///
/// Every operation rounds to nearest and then widens each bound one ulp outward,
/// which encloses the exact result of the operation on the enclosed reals.
/// Used when quantities live in two different quadratic fields at once.

#include <string>

#include "rigid1d/quad.hpp"

namespace rigid1d {

class Enclosure {
 public:
  Enclosure() = default;
  /// Degenerate enclosure of an exactly representable double.
  explicit Enclosure(double exact) : lo_(exact), hi_(exact) {}
  Enclosure(double lo, double hi);

  static Enclosure of(const Rational& q);
  static Enclosure of(const QuadVal& v);
  static Enclosure sqrt_of(std::int64_t n);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double width() const { return hi_ - lo_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }

  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  /// Throws std::domain_error when b contains zero.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);

  Enclosure abs() const;
  Enclosure pow(unsigned n) const;

  /// +1 / -1 when the sign is certain, 0 when the enclosure straddles zero.
  int certain_sign() const;

  std::string to_string() const;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// a <= b for every pair of enclosed values.
inline bool certainly_le(const Enclosure& a, const Enclosure& b) { return a.hi() <= b.lo(); }
inline bool certainly_lt(const Enclosure& a, const Enclosure& b) { return a.hi() < b.lo(); }

}  // namespace rigid1d
