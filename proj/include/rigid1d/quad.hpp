#pragma once

/**
 * @file quad.hpp
 * @brief Exact arithmetic in real quadratic fields Q(sqrt d).
 *
 * A QuadVal is x + y*sqrt(d) with rational x, y and square-free d > 1.
 * Values with y == 0 are plain rationals and combine with any field.
 * Signs are decided by comparing x^2 against d*y^2, never in floating point.
 */

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rigid1d {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Thrown when two values from different quadratic fields meet in one expression.
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Largest m with m^2 | n, and the square-free cofactor: n = m^2 * d.
struct SquareFreeSplit {
  std::int64_t square_root_part;
  std::int64_t square_free_part;
};
SquareFreeSplit split_square_free(std::int64_t n);

class QuadVal {
 public:
  QuadVal() = default;
  QuadVal(long v) : x_(v) {}  // NOLINT(google-explicit-constructor)
  QuadVal(const Rational& v) : x_(v) {}  // NOLINT(google-explicit-constructor)
  /// x + y*sqrt(d); d must be square-free and > 1 (d == 0 only when y == 0).
  QuadVal(Rational x, Rational y, std::int64_t d);

  /// sqrt(n) for a positive integer n, simplified to m*sqrt(d).
  static QuadVal sqrt_of(std::int64_t n);

  const Rational& rational_part() const { return x_; }
  const Rational& radical_coeff() const { return y_; }
  /// The field radicand; 0 for values that were never attached to a field.
  std::int64_t radicand() const { return d_; }
  /// Radicand that actually matters for mixing: 0 when the value is rational.
  std::int64_t field() const { return y_ == 0 ? 0 : d_; }

  bool is_rational() const { return y_ == 0; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }
  int sign() const;
  double to_double() const;

  QuadVal operator-() const;
  QuadVal& operator+=(const QuadVal& o);
  QuadVal& operator-=(const QuadVal& o);
  QuadVal& operator*=(const QuadVal& o);
  QuadVal& operator/=(const QuadVal& o);

  friend QuadVal operator+(QuadVal a, const QuadVal& b) { return a += b; }
  friend QuadVal operator-(QuadVal a, const QuadVal& b) { return a -= b; }
  friend QuadVal operator*(QuadVal a, const QuadVal& b) { return a *= b; }
  friend QuadVal operator/(QuadVal a, const QuadVal& b) { return a /= b; }

  friend bool operator==(const QuadVal& a, const QuadVal& b);
  friend std::strong_ordering operator<=>(const QuadVal& a, const QuadVal& b);

  QuadVal abs() const { return sign() < 0 ? -*this : *this; }
  QuadVal pow(unsigned n) const;
  /// Galois conjugate x - y*sqrt(d).
  QuadVal conjugate() const;

  /// Human form "x+y√d" (rational parts in lowest terms).
  std::string to_string() const;
  /// Machine form "(x, y, d)" used by certificates.
  std::string to_triple(std::int64_t field_hint = 0) const;

  /// Accepts "3", "-1/2", "√2", "2√8", "1/2+3/4√2", "1-sqrt(2)", "(x, y, d)".
  static QuadVal parse(std::string_view text);

 private:
  static std::int64_t common_field(const QuadVal& a, const QuadVal& b);

  Rational x_{0};
  Rational y_{0};
  std::int64_t d_{0};
};

/// Sign of x + y*sqrt(d) from rational parts alone.
int quadratic_sign(const Rational& x, const Rational& y, std::int64_t d);

std::ostream& operator<<(std::ostream& os, const QuadVal& v);

/// Parses "p", "p/q", "-p/q" into a canonical rational; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace rigid1d
