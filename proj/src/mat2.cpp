#include "rigid1d/mat2.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

namespace rigid1d {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw IntegerOverflow("Mat2Z: entry exceeds int64 range");
  return static_cast<std::int64_t>(v);
}

__int128 wide(std::int64_t v) { return static_cast<__int128>(v); }

}  // namespace

Mat2Z::Mat2Z(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : a_(a), b_(b), c_(c), d_(d) {
  if (wide(a) * d - wide(b) * c != 1)
    throw std::invalid_argument("Mat2Z: determinant of " + to_string() + " is not 1");
}

std::int64_t Mat2Z::trace() const { return narrow(wide(a_) + d_); }

Mat2Z Mat2Z::operator*(const Mat2Z& o) const {
  return unchecked(narrow(wide(a_) * o.a_ + wide(b_) * o.c_), narrow(wide(a_) * o.b_ + wide(b_) * o.d_),
                   narrow(wide(c_) * o.a_ + wide(d_) * o.c_), narrow(wide(c_) * o.b_ + wide(d_) * o.d_));
}

IntVec2 Mat2Z::operator*(const IntVec2& v) const {
  return {narrow(wide(a_) * v.m + wide(b_) * v.n), narrow(wide(c_) * v.m + wide(d_) * v.n)};
}

Mat2Z Mat2Z::power(std::int64_t n) const {
  Mat2Z base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Mat2Z result;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Mat2Z::to_string() const {
  std::ostringstream os;
  os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
  return os.str();
}

Mat2Z Mat2Z::parse(std::string_view text) {
  std::vector<std::int64_t> nums;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      if (cur == "-" || cur == "+") throw std::invalid_argument("Mat2Z::parse: dangling sign");
      nums.push_back(std::stoll(cur));
      cur.clear();
    }
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
      cur.push_back(ch);
    } else if (ch == '[' || ch == ']' || ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      throw std::invalid_argument("Mat2Z::parse: unexpected character in '" + std::string(text) + "'");
    }
  }
  flush();
  if (nums.size() != 4) throw std::invalid_argument("Mat2Z::parse: need four entries in '" + std::string(text) + "'");
  return Mat2Z(nums[0], nums[1], nums[2], nums[3]);
}

Mat2Z compose(const Mat2Z& f, const Mat2Z& g) { return f * g; }
Mat2Z invert(const Mat2Z& f) { return f.inverse(); }
Mat2Z power(const Mat2Z& f, std::int64_t n) { return f.power(n); }
Mat2Z transpose(const Mat2Z& f) { return f.transpose(); }

}  // namespace rigid1d
