#include "rigid1d/quad.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace rigid1d {

SquareFreeSplit split_square_free(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("split_square_free: n must be positive");
  std::int64_t root = 1;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  }
  return {root, rest};
}

QuadVal::QuadVal(Rational x, Rational y, std::int64_t d) : x_(std::move(x)), y_(std::move(y)), d_(d) {
  x_.canonicalize();
  y_.canonicalize();
  if (d_ == 0) {
    if (y_ != 0) throw std::invalid_argument("QuadVal: irrational part needs a radicand");
    return;
  }
  if (d_ < 2 || split_square_free(d_).square_root_part != 1)
    throw std::invalid_argument("QuadVal: radicand must be square-free and > 1, got " + std::to_string(d_));
}

QuadVal QuadVal::sqrt_of(std::int64_t n) {
  auto [m, d] = split_square_free(n);
  if (d == 1) return QuadVal(Rational(m));
  return QuadVal(Rational(0), Rational(m), d);
}

int quadratic_sign(const Rational& x, const Rational& y, std::int64_t d) {
  const int sx = sgn(x);
  const int sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: whichever of |x| and |y|sqrt(d) is larger wins.
  const Rational x2 = x * x;
  const Rational y2d = y * y * d;
  return x2 > y2d ? sx : sy;
}

int QuadVal::sign() const { return quadratic_sign(x_, y_, d_); }

double QuadVal::to_double() const {
  if (y_ == 0) return x_.get_d();
  const double root = std::sqrt(static_cast<double>(d_));
  if (sgn(x_) * sgn(y_) >= 0) return x_.get_d() + y_.get_d() * root;
  // Opposite signs cancel; divide the exact norm by the conjugate, whose terms share a sign.
  const Rational norm = x_ * x_ - Rational(d_) * y_ * y_;
  return norm.get_d() / (x_.get_d() - y_.get_d() * root);
}

std::int64_t QuadVal::common_field(const QuadVal& a, const QuadVal& b) {
  const auto fa = a.field();
  const auto fb = b.field();
  if (fa != 0 && fb != 0 && fa != fb)
    throw FieldMismatch("QuadVal: mixing Q(sqrt " + std::to_string(fa) + ") with Q(sqrt " +
                        std::to_string(fb) + ")");
  if (fa != 0) return fa;
  if (fb != 0) return fb;
  return a.d_ != 0 ? a.d_ : b.d_;
}

QuadVal QuadVal::operator-() const {
  QuadVal r = *this;
  r.x_ = -r.x_;
  r.y_ = -r.y_;
  return r;
}

QuadVal& QuadVal::operator+=(const QuadVal& o) {
  d_ = common_field(*this, o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadVal& QuadVal::operator-=(const QuadVal& o) {
  d_ = common_field(*this, o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadVal& QuadVal::operator*=(const QuadVal& o) {
  const auto d = common_field(*this, o);
  if (y_ == 0 && o.y_ == 0) {
    x_ *= o.x_;
  } else {
    Rational nx = x_ * o.x_ + y_ * o.y_ * d;
    Rational ny = x_ * o.y_ + y_ * o.x_;
    x_ = std::move(nx);
    y_ = std::move(ny);
  }
  d_ = d;
  return *this;
}

QuadVal& QuadVal::operator/=(const QuadVal& o) {
  if (o.is_zero()) throw std::domain_error("QuadVal: division by zero");
  const auto d = common_field(*this, o);
  if (o.y_ == 0) {
    x_ /= o.x_;
    y_ /= o.x_;
  } else {
    // (x + y r)(u - v r) / (u^2 - v^2 d)
    const Rational norm = o.x_ * o.x_ - o.y_ * o.y_ * d;
    Rational nx = (x_ * o.x_ - y_ * o.y_ * d) / norm;
    Rational ny = (y_ * o.x_ - x_ * o.y_) / norm;
    x_ = std::move(nx);
    y_ = std::move(ny);
  }
  d_ = d;
  return *this;
}

bool operator==(const QuadVal& a, const QuadVal& b) {
  if (a.y_ == 0 && b.y_ == 0) return a.x_ == b.x_;
  QuadVal::common_field(a, b);
  return a.x_ == b.x_ && a.y_ == b.y_;
}

std::strong_ordering operator<=>(const QuadVal& a, const QuadVal& b) {
  const auto d = QuadVal::common_field(a, b);
  const int s = quadratic_sign(a.x_ - b.x_, a.y_ - b.y_, d);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

QuadVal QuadVal::pow(unsigned n) const {
  QuadVal result(Rational(1));
  result.d_ = d_;
  QuadVal base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

QuadVal QuadVal::conjugate() const {
  QuadVal r = *this;
  r.y_ = -r.y_;
  return r;
}

std::string QuadVal::to_string() const {
  std::ostringstream os;
  if (y_ == 0) {
    os << x_.get_str();
    return os.str();
  }
  if (x_ != 0) os << x_.get_str();
  if (y_ == 1) {
    os << (x_ != 0 ? "+" : "");
  } else if (y_ == -1) {
    os << "-";
  } else {
    if (x_ != 0 && y_ > 0) os << "+";
    os << y_.get_str();
  }
  os << "√" << d_;
  return os.str();
}

std::string QuadVal::to_triple(std::int64_t field_hint) const {
  const auto d = d_ != 0 ? d_ : field_hint;
  return "(" + x_.get_str() + ", " + y_.get_str() + ", " + std::to_string(d) + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadVal& v) { return os << v.to_string(); }

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

constexpr std::string_view kRadical = "√";

// One additive term: an optional rational coefficient followed by an optional radical.
QuadVal parse_term(const std::string& term, std::string_view whole) {
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("cannot parse quadratic value '" + std::string(whole) + "': " + why);
  };
  std::size_t rad = term.find(kRadical);
  std::size_t rad_len = kRadical.size();
  bool paren = false;
  if (rad == std::string::npos) {
    rad = term.find("sqrt(");
    rad_len = 5;
    paren = true;
  }
  if (rad == std::string::npos) return QuadVal(parse_rational(term));

  std::string coeff = term.substr(0, rad);
  if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
  Rational c(1);
  if (coeff == "-") {
    c = -1;
  } else if (coeff == "+" || coeff.empty()) {
    c = 1;
  } else {
    c = parse_rational(coeff);
  }
  std::string radicand = term.substr(rad + rad_len);
  if (paren) {
    if (radicand.empty() || radicand.back() != ')') throw fail("unbalanced sqrt(");
    radicand.pop_back();
  }
  if (radicand.empty()) throw fail("missing radicand");
  for (char ch : radicand)
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail("radicand must be a positive integer");
  const std::int64_t n = std::stoll(radicand);
  if (n <= 0) throw fail("radicand must be positive");
  return QuadVal(c) * QuadVal::sqrt_of(n);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (slash || !digits) throw std::invalid_argument("malformed rational '" + s + "'");
      slash = true;
      digits = false;
    } else if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      digits = true;
    } else {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  if (!digits) throw std::invalid_argument("malformed rational '" + s + "'");
  Rational r(s[0] == '+' ? s.substr(1) : s, 10);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

QuadVal QuadVal::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty quadratic value");
  if (s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("unbalanced triple '" + s + "'");
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(s[i]);
      }
    }
    parts.push_back(cur);
    if (parts.size() != 3) throw std::invalid_argument("triple needs three fields: '" + s + "'");
    const Rational x = parse_rational(parts[0]);
    const Rational y = parse_rational(parts[1]);
    const std::int64_t d = std::stoll(parts[2]);
    if (y == 0) return QuadVal(x, 0, d >= 2 ? d : 0);
    return QuadVal(x, y, d);
  }
  // Split on top-level '+'/'-' that start a new term.
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    const bool starts_term = (ch == '+' || ch == '-') && i > 0 && depth == 0 && s[i - 1] != '/' &&
                             s[i - 1] != '*' && s[i - 1] != '(';
    if (starts_term) {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(ch);
  }
  terms.push_back(cur);
  QuadVal total;
  for (const auto& t : terms) total += parse_term(t, text);
  return total;
}

}  // namespace rigid1d
