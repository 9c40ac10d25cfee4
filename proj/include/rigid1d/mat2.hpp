#pragma once

/// @file mat2.hpp
/// Elements of SL(2,Z) as exact 2x2 integer matrices [[a,b],[c,d]] with ad - bc = 1.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rigid1d {

/// Thrown when an exact integer product leaves the int64 range.
class IntegerOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// h1^m h2^n, identified with (m, n) in Z^2.
struct IntVec2 {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend bool operator==(const IntVec2&, const IntVec2&) = default;
  IntVec2 operator+(const IntVec2& o) const { return {m + o.m, n + o.n}; }
  IntVec2 operator-() const { return {-m, -n}; }
};

class Mat2Z {
 public:
  /// Identity.
  constexpr Mat2Z() = default;
  /// Throws std::invalid_argument unless ad - bc == 1.
  Mat2Z(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static Mat2Z identity() { return {}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  std::int64_t trace() const;

  Mat2Z operator*(const Mat2Z& o) const;
  IntVec2 operator*(const IntVec2& v) const;
  Mat2Z inverse() const { return unchecked(d_, -b_, -c_, a_); }
  Mat2Z transpose() const { return unchecked(a_, c_, b_, d_); }
  /// f^n for any integer n (negative powers go through the inverse).
  Mat2Z power(std::int64_t n) const;

  friend bool operator==(const Mat2Z&, const Mat2Z&) = default;

  std::string to_string() const;
  /// Parses "[[a,b],[c,d]]" (whitespace ignored).
  static Mat2Z parse(std::string_view text);

 private:
  static Mat2Z unchecked(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    Mat2Z m;
    m.a_ = a;
    m.b_ = b;
    m.c_ = c;
    m.d_ = d;
    return m;
  }

  std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

Mat2Z compose(const Mat2Z& f, const Mat2Z& g);
Mat2Z invert(const Mat2Z& f);
Mat2Z power(const Mat2Z& f, std::int64_t n);
Mat2Z transpose(const Mat2Z& f);

}  // namespace rigid1d

template <>
struct std::hash<rigid1d::Mat2Z> {
  std::size_t operator()(const rigid1d::Mat2Z& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : {m.a(), m.b(), m.c(), m.d()}) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};
