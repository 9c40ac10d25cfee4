#include "rigid1d/action_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

namespace rigid1d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxDepth = 10;
constexpr mpfr_prec_t kStartPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = 16384;
constexpr mpfr_prec_t kPointPrecision = 256;

double turns_between(double vx, double vy, double wx, double wy) {
  return std::atan2(vx * wy - vy * wx, vx * wx + vy * wy) / (2 * std::numbers::pi);
}

double angle_turns(double vx, double vy) {
  double u = std::atan2(vy, vx) / (2 * std::numbers::pi);
  if (u < 0) u += 1;
  if (u >= 1) u -= 1;
  return u;
}

/// u = 1/2 + atan(x)/pi, the inverse chart of the interval base.
double interval_u(const BigReal& x) {
  if (!x.is_finite()) return x.sign() < 0 ? 0.0 : 1.0;
  BigReal r(mpfr_prec_t{64});
  mpfr_atan(r.get(), x.get(), MPFR_RNDN);
  BigReal p = BigReal::pi(MPFR_RNDN, 64);
  mpfr_div(r.get(), r.get(), p.get(), MPFR_RNDN);
  return std::clamp(0.5 + r.to_double(), 0.0, 1.0);
}

BigReal interval_x_of_u(double u) {
  BigReal x(kPointPrecision);
  if (u <= 0) {
    mpfr_set_inf(x.get(), -1);
    return x;
  }
  if (u >= 1) {
    mpfr_set_inf(x.get(), 1);
    return x;
  }
  BigReal p = BigReal::pi(MPFR_RNDN, kPointPrecision);
  mpfr_mul_d(x.get(), p.get(), u - 0.5, MPFR_RNDN);
  mpfr_tan(x.get(), x.get(), MPFR_RNDN);
  return x;
}

/// The free pair x+1, x^3 and inverses, rounded in direction rnd.
void interval_letter(Letter l, mpfr_ptr x, mpfr_rnd_t rnd) {
  switch (l) {
    case Letter::g1: mpfr_add_ui(x, x, 1, rnd); break;
    case Letter::G1: mpfr_sub_ui(x, x, 1, rnd); break;
    case Letter::g2: mpfr_pow_ui(x, x, 3, rnd); break;
    case Letter::G2: mpfr_cbrt(x, x, rnd); break;
    default: throw std::invalid_argument("interval_letter: not a matrix letter");
  }
}

struct OrbitEntry {
  Word word;
  Mat2Z label;
};

std::vector<OrbitEntry> orbit_words(int depth) {
  std::vector<OrbitEntry> out;
  out.push_back({Word(), Mat2Z()});
  for_each_reduced_word(depth, [&](const Word& w) {
    out.push_back({w, word_to_matrix(w)});
    return true;
  });
  return out;
}

/// Sign of A + B*sigma + C*sigma^2 for the configured base slope.
class SlopePoly {
 public:
  explicit SlopePoly(const BasePoint& p) : p_(p) {
    if (!p.is_pi) {
      sigma_ = p.value;
    }
  }

  int sign(const BigInt& a, const BigInt& b, const BigInt& c) const {
    if (a == 0 && b == 0 && c == 0) return 0;
    if (!p_.is_pi) {
      const QuadVal v = QuadVal(Rational(a)) + QuadVal(Rational(b)) * sigma_ + QuadVal(Rational(c)) * sigma_ * sigma_;
      return v.sign();
    }
    // pi is transcendental, so a non-zero polynomial never vanishes there; widen until certain.
    for (mpfr_prec_t prec = 64; prec <= 8192; prec *= 2) {
      const BigReal lo = BigReal::pi(MPFR_RNDD, prec);
      const BigReal hi = BigReal::pi(MPFR_RNDU, prec);
      BigReal lo2(prec), hi2(prec);
      mpfr_mul(lo2.get(), lo.get(), lo.get(), MPFR_RNDD);
      mpfr_mul(hi2.get(), hi.get(), hi.get(), MPFR_RNDU);
      BigReal sum_lo(prec), sum_hi(prec), term(prec);
      mpfr_set_z(sum_lo.get(), a.get_mpz_t(), MPFR_RNDD);
      mpfr_set_z(sum_hi.get(), a.get_mpz_t(), MPFR_RNDU);
      auto add_term = [&](const BigInt& coef, const BigReal& xlo, const BigReal& xhi) {
        const bool pos = coef >= 0;
        mpfr_mul_z(term.get(), (pos ? xlo : xhi).get(), coef.get_mpz_t(), MPFR_RNDD);
        mpfr_add(sum_lo.get(), sum_lo.get(), term.get(), MPFR_RNDD);
        mpfr_mul_z(term.get(), (pos ? xhi : xlo).get(), coef.get_mpz_t(), MPFR_RNDU);
        mpfr_add(sum_hi.get(), sum_hi.get(), term.get(), MPFR_RNDU);
      };
      add_term(b, lo, hi);
      add_term(c, lo2, hi2);
      if (sum_lo.sign() > 0) return 1;
      if (sum_hi.sign() < 0) return -1;
    }
    throw ConstructionError("circle model: could not decide an orbit comparison at the base slope");
  }

 private:
  BasePoint p_;
  QuadVal sigma_;
};

}  // namespace

std::string to_string(Variant v) { return v == Variant::circle ? "circle" : "interval"; }

Variant parse_variant(std::string_view text) {
  if (text == "circle") return Variant::circle;
  if (text == "interval") return Variant::interval;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "' (expected circle or interval)");
}

Rational GapSchedule::length(int depth) const {
  Rational out = scale;
  for (int i = 0; i < depth; ++i) out *= ratio;
  return out;
}

BigInt GapSchedule::words_of_length(int n) {
  if (n == 0) return 1;
  BigInt out = 4;
  for (int i = 1; i < n; ++i) out *= 3;
  return out;
}

Rational GapSchedule::materialized_total(int depth) const {
  Rational out = 0;
  for (int n = 0; n <= depth; ++n) out += Rational(words_of_length(n)) * length(n);
  return out;
}

Rational GapSchedule::infinite_total() const {
  if (!summable()) throw std::domain_error("gap schedule is not summable");
  Rational out = scale * (1 + 4 * ratio / (1 - 3 * ratio));
  out.canonicalize();
  return out;
}

bool GapSchedule::summable() const { return scale > 0 && ratio > 0 && 3 * ratio < 1; }

double BasePoint::to_double() const { return is_pi ? std::numbers::pi : value.to_double(); }

std::string BasePoint::to_string() const { return is_pi ? "pi" : value.to_string(); }

BasePoint BasePoint::parse(std::string_view text) {
  if (text == "pi" || text == "π") return pi();
  return exact(QuadVal::parse(text));
}

double FlowChart::psi(double s) {
  if (s <= 0) return -kInf;
  if (s >= 1) return kInf;
  return std::tan(std::numbers::pi * (s - 0.5));
}

double FlowChart::psi_inv(double y) {
  if (y == -kInf) return 0;
  if (y == kInf) return 1;
  return 0.5 + std::atan(y) / std::numbers::pi;
}

ModelConfig ModelConfig::circle_default(int depth) {
  ModelConfig c;
  c.variant = Variant::circle;
  c.depth = depth;
  c.base_point = BasePoint::pi();
  return c;
}

ModelConfig ModelConfig::interval_default(int depth) {
  ModelConfig c;
  c.variant = Variant::interval;
  c.depth = depth;
  c.base_point = BasePoint::pi();
  return c;
}

ActionModel ActionModel::build(const ModelConfig& config) {
  if (config.depth < 0 || config.depth > kMaxDepth)
    throw std::invalid_argument("depth must lie in [0, " + std::to_string(kMaxDepth) + "]");
  if (!config.schedule.summable())
    throw std::invalid_argument("gap schedule must satisfy scale > 0 and 0 < ratio < 1/3");
  if (config.schedule.materialized_total(config.depth) >= 1)
    throw std::invalid_argument("materialized gap lengths sum to " +
                                config.schedule.materialized_total(config.depth).get_str() +
                                ", which does not fit in the unit model space");
  ActionModel m;
  m.config_ = config;
  m.t1_ = config.t1.to_double();
  m.t2_ = config.t2.to_double();
  if (config.variant == Variant::circle) {
    m.build_circle();
  } else {
    m.build_interval();
  }
  return m;
}

void ActionModel::build_circle() {
  const double sigma = config_.base_point.to_double();
  const double norm = std::hypot(1.0, sigma);
  px_ = 1 / norm;
  py_ = sigma / norm;

  std::vector<OrbitEntry> entries = orbit_words(config_.depth);
  const SlopePoly poly(config_.base_point);
  // M (1, sigma) = (a + b sigma, c + d sigma); half 0 is the upper half plane including the positive x-axis.
  std::vector<int> half(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Mat2Z& m = entries[i].label;
    const int sy = poly.sign(m.c(), m.d(), 0);
    half[i] = sy > 0 ? 0 : sy < 0 ? 1 : (poly.sign(m.a(), m.b(), 0) > 0 ? 0 : 1);
  }
  auto cross_sign = [&](std::size_t i, std::size_t j) {
    const Mat2Z& v = entries[i].label;
    const Mat2Z& w = entries[j].label;
    const BigInt a1(v.a()), b1(v.b()), c1(v.c()), d1(v.d());
    const BigInt a2(w.a()), b2(w.b()), c2(w.c()), d2(w.d());
    return poly.sign(a1 * c2 - c1 * a2, a1 * d2 + b1 * c2 - c1 * b2 - d1 * a2, b1 * d2 - d1 * b2);
  };
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (half[i] != half[j]) return half[i] < half[j];
    return cross_sign(i, j) > 0;
  });
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const std::size_t i = order[k], j = order[k + 1];
    if (half[i] == half[j] && cross_sign(i, j) == 0)
      throw ConstructionError("stabilizer collision: " + entries[i].word.to_string() + " and " +
                              entries[j].word.to_string() + " send the base point " + config_.base_point.to_string() +
                              " to the same point");
  }

  std::vector<Gap> gaps;
  gaps.reserve(order.size());
  double last_u = 0;
  for (std::size_t i : order) {
    const Mat2Z& m = entries[i].label;
    Gap g;
    g.word = entries[i].word;
    g.label = m;
    g.depth = static_cast<int>(g.word.size());
    g.length = config_.schedule.length(g.depth);
    g.base_u = std::max(last_u, angle_turns(m.a() * px_ + m.b() * py_, m.c() * px_ + m.d() * py_));
    last_u = g.base_u;
    gaps.push_back(std::move(g));
  }
  layout(std::move(gaps));
}

void ActionModel::build_interval() {
  std::vector<OrbitEntry> entries = orbit_words(config_.depth);
  const std::size_t n = entries.size();
  std::vector<BigReal> lo, hi;
  std::vector<std::size_t> order(n);
  bool resolved = false;
  std::string unresolved;
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision && !resolved; prec *= 2) {
    BigReal p_lo = config_.base_point.is_pi ? BigReal::pi(MPFR_RNDD, prec)
                                            : BigReal::from_quad(config_.base_point.value, MPFR_RNDD, prec);
    BigReal p_hi = config_.base_point.is_pi ? BigReal::pi(MPFR_RNDU, prec)
                                            : BigReal::from_quad(config_.base_point.value, MPFR_RNDU, prec);
    lo.assign(n, BigReal(prec));
    hi.assign(n, BigReal(prec));
    for (std::size_t i = 0; i < n; ++i) {
      mpfr_set(lo[i].get(), p_lo.get(), MPFR_RNDD);
      mpfr_set(hi[i].get(), p_hi.get(), MPFR_RNDU);
      const auto& letters = entries[i].word.letters();
      // Every letter map is increasing, so rounding the ends outward keeps an enclosure.
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        interval_letter(*it, lo[i].get(), MPFR_RNDD);
        interval_letter(*it, hi[i].get(), MPFR_RNDU);
      }
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      const int c = compare(lo[i], lo[j]);
      if (c != 0) return c < 0;
      return compare(hi[i], hi[j]) < 0;
    });
    resolved = true;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const std::size_t i = order[k], j = order[k + 1];
      if (hi[i] < lo[j]) continue;
      if (lo[i] == hi[i] && lo[j] == hi[j] && lo[i] == lo[j])
        throw ConstructionError("stabilizer collision: " + entries[i].word.to_string() + " and " +
                                entries[j].word.to_string() + " send the base point " +
                                config_.base_point.to_string() + " to the same point");
      resolved = false;
      unresolved = entries[i].word.to_string() + " and " + entries[j].word.to_string();
      break;
    }
  }
  if (!resolved)
    throw ConstructionError("stabilizer collision (unresolved at " + std::to_string(kMaxPrecision) +
                            " bits): " + unresolved + " send the base point " + config_.base_point.to_string() +
                            " to points that cannot be separated");

  std::vector<Gap> gaps;
  gaps.reserve(n);
  interval_keys_.clear();
  interval_keys_.reserve(n);
  double last_u = 0;
  for (std::size_t i : order) {
    Gap g;
    g.word = entries[i].word;
    g.label = entries[i].label;
    g.depth = static_cast<int>(g.word.size());
    g.length = config_.schedule.length(g.depth);
    g.base_u = std::max(last_u, interval_u(lo[i]));
    last_u = g.base_u;
    gaps.push_back(std::move(g));
    interval_keys_.push_back(lo[i]);
  }
  layout(std::move(gaps));
}

void ActionModel::layout(std::vector<Gap> sorted) {
  gaps_ = std::move(sorted);
  total_ = 0;
  for (const Gap& g : gaps_) total_ += g.length;
  total_d_ = total_.get_d();
  prefix_.assign(gaps_.size() + 1, 0.0);
  Rational running = 0;
  for (std::size_t k = 0; k < gaps_.size(); ++k) {
    running += gaps_[k].length;
    prefix_[k + 1] = running.get_d();
  }
  index_.clear();
  for (std::size_t k = 0; k < gaps_.size(); ++k) {
    Gap& g = gaps_[k];
    g.left = (1 - total_d_) * g.base_u + prefix_[k];
    if (k > 0) g.left = std::max(g.left, gaps_[k - 1].right);
    g.right = g.left + g.length.get_d();
    index_.emplace(g.label, k);
    if (g.depth == 0) identity_index_ = k;
  }
}

std::optional<std::size_t> ActionModel::find_gap(const Mat2Z& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational ActionModel::truncation_residual() const { return config_.schedule.infinite_total() - total_; }

std::size_t ActionModel::gaps_left_of_interval_x(const BigReal& x) const {
  return static_cast<std::size_t>(
      std::partition_point(interval_keys_.begin(), interval_keys_.end(), [&](const BigReal& k) { return k < x; }) -
      interval_keys_.begin());
}

std::size_t ActionModel::gaps_left_of_u(double u) const {
  return static_cast<std::size_t>(
      std::partition_point(gaps_.begin(), gaps_.end(), [&](const Gap& g) { return g.base_u < u; }) - gaps_.begin());
}

double ActionModel::position_of_u(double u, std::size_t gaps_before) const {
  double x = (1 - total_d_) * u + prefix_[gaps_before];
  if (gaps_before > 0) x = std::max(x, gaps_[gaps_before - 1].right);
  if (gaps_before < gaps_.size()) x = std::min(x, gaps_[gaps_before].left);
  return x;
}

double ActionModel::base_u_of(const Mat2Z& m) const {
  return angle_turns(m.a() * px_ + m.b() * py_, m.c() * px_ + m.d() * py_);
}

BigReal ActionModel::orbit_point(const Word& w) const {
  BigReal x = config_.base_point.is_pi ? BigReal::pi(MPFR_RNDN, kPointPrecision)
                                       : BigReal::from_quad(config_.base_point.value, MPFR_RNDN, kPointPrecision);
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) interval_letter(*it, x.get(), MPFR_RNDN);
  return x;
}

SymPoint ActionModel::gap_point(const Mat2Z& label, double y) const {
  SymPoint p;
  p.in_gap = true;
  p.label = label;
  if (auto k = find_gap(label)) {
    p.word = gaps_[*k].word;
    p.label_depth = gaps_[*k].depth;
  } else {
    throw std::invalid_argument("gap_point: label " + label.to_string() + " is not materialized");
  }
  p.y = y;
  if (variant() == Variant::circle) p.turns = base_u_of(label);
  return p;
}

SymPoint ActionModel::decode(double x) const {
  double winding = 0;
  if (variant() == Variant::circle) {
    winding = std::floor(x);
    x -= winding;
  } else {
    x = std::clamp(x, 0.0, 1.0);
  }
  const auto it = std::partition_point(gaps_.begin(), gaps_.end(), [&](const Gap& g) { return g.right < x; });
  if (it != gaps_.end() && it->left <= x) {
    const double s = std::clamp((x - it->left) / (it->right - it->left), 0.0, 1.0);
    SymPoint p;
    p.in_gap = true;
    p.label = it->label;
    p.word = it->word;
    p.label_depth = it->depth;
    p.y = FlowChart::psi(s);
    if (variant() == Variant::circle) p.turns = base_u_of(it->label) + winding;
    return p;
  }
  const std::size_t k = static_cast<std::size_t>(it - gaps_.begin());
  const double u = std::clamp((x - prefix_[k]) / (1 - total_d_), 0.0, 1.0);
  SymPoint p;
  if (variant() == Variant::circle) {
    p.vx = std::cos(2 * std::numbers::pi * u);
    p.vy = std::sin(2 * std::numbers::pi * u);
    p.turns = u + winding;
  } else {
    p.x = interval_x_of_u(u);
  }
  return p;
}

double ActionModel::encode_base(const SymPoint& p) const {
  if (variant() == Variant::circle) {
    const double u = angle_turns(p.vx, p.vy);
    return position_of_u(u, gaps_left_of_u(u));
  }
  return position_of_u(interval_u(p.x), gaps_left_of_interval_x(p.x));
}

double ActionModel::encode(const SymPoint& p) const {
  if (!p.in_gap) return encode_base(p);
  if (auto k = find_gap(p.label)) {
    const Gap& g = gaps_[*k];
    return std::clamp(g.left + (g.right - g.left) * FlowChart::psi_inv(p.y), g.left, g.right);
  }
  // Unmaterialized gap: collapse to the base point of its label.
  SymPoint base;
  if (variant() == Variant::circle) {
    const Mat2Z& m = p.label;
    base.vx = m.a() * px_ + m.b() * py_;
    base.vy = m.c() * px_ + m.d() * py_;
  } else {
    base.x = orbit_point(p.word);
  }
  return encode_base(base);
}

double ActionModel::encode_lift(const SymPoint& p) const {
  const double x = encode(p);
  if (variant() == Variant::interval) return x;
  const double u = p.in_gap ? base_u_of(p.label) : angle_turns(p.vx, p.vy);
  return x + std::round(p.turns - u);
}

void ActionModel::apply_matrix_letter(Letter l, SymPoint& p) const {
  const Mat2Z m = letter_matrix(l);
  if (p.in_gap) {
    if (variant() == Variant::circle) {
      const Mat2Z& old = p.label;
      const double vx = old.a() * px_ + old.b() * py_, vy = old.c() * px_ + old.d() * py_;
      p.turns += turns_between(vx, vy, m.a() * vx + m.b() * vy, m.c() * vx + m.d() * vy);
    }
    p.label = m * p.label;
    p.word = p.word.prepended(l);
    p.label_depth = static_cast<int>(p.word.size());
    return;
  }
  if (variant() == Variant::circle) {
    double wx = m.a() * p.vx + m.b() * p.vy, wy = m.c() * p.vx + m.d() * p.vy;
    p.turns += turns_between(p.vx, p.vy, wx, wy);
    const double n = std::hypot(wx, wy);
    p.vx = wx / n;
    p.vy = wy / n;
    return;
  }
  interval_letter(l, p.x.get(), MPFR_RNDN);
}

void ActionModel::apply_flow(const IntVec2& v, SymPoint& p) const {
  if (!p.in_gap || (v.m == 0 && v.n == 0)) return;
  // On gap I_M the letter h_v acts as the flow by <M^{-1} v, (t1, t2)>.
  const IntVec2 w = p.label.inverse() * v;
  p.y += static_cast<double>(w.m) * t1_ + static_cast<double>(w.n) * t2_;
}

SymPoint ActionModel::apply(const Word& w, SymPoint p) const {
  IntVec2 run;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    switch (*it) {
      case Letter::h1: run.m += 1; break;
      case Letter::H1: run.m -= 1; break;
      case Letter::h2: run.n += 1; break;
      case Letter::H2: run.n -= 1; break;
      default:
        apply_flow(run, p);
        run = {};
        apply_matrix_letter(*it, p);
    }
  }
  apply_flow(run, p);
  return p;
}

int ActionModel::depth_at(double x) const {
  const SymPoint p = decode(x);
  return p.in_gap ? p.label_depth : 0;
}

ActionModel build_circle_model(int depth, const GapSchedule& schedule, const BasePoint& p) {
  ModelConfig c = ModelConfig::circle_default(depth);
  c.schedule = schedule;
  c.base_point = p;
  return ActionModel::build(c);
}

ActionModel build_interval_model(int depth, const GapSchedule& schedule, const BasePoint& p) {
  ModelConfig c = ModelConfig::interval_default(depth);
  c.schedule = schedule;
  c.base_point = p;
  return ActionModel::build(c);
}

double evaluate(const ActionModel& model, const Word& g, double x) {
  return model.encode(model.apply(g, model.decode(x)));
}

double evaluate_lift(const ActionModel& model, const Word& g, double x) {
  return model.encode_lift(model.apply(g, model.decode(x)));
}

double model_distance(const ActionModel& model, double x, double y) {
  double d = std::abs(x - y);
  if (model.variant() == Variant::circle) {
    d = std::fmod(d, 1.0);
    d = std::min(d, 1 - d);
  }
  return d;
}

std::vector<double> safe_samples(const ActionModel& model, int max_depth, std::size_t count, std::uint64_t seed,
                                 double nongap_fraction) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < model.gaps().size(); ++k)
    if (model.gaps()[k].depth <= max_depth) candidates.push_back(k);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (candidates.empty() || unit(rng) < nongap_fraction) {
      // A non-gap point: pick an unblown coordinate and push it through the layout.
      const double u = 0.001 + 0.998 * unit(rng);
      SymPoint p;
      if (model.variant() == Variant::circle) {
        p.vx = std::cos(2 * std::numbers::pi * u);
        p.vy = std::sin(2 * std::numbers::pi * u);
      } else {
        p.x = interval_x_of_u(u);
      }
      out.push_back(model.encode(p));
      continue;
    }
    const Gap& g = model.gaps()[candidates[static_cast<std::size_t>(unit(rng) * candidates.size()) % candidates.size()]];
    const double s = 0.05 + 0.9 * unit(rng);
    out.push_back(g.left + (g.right - g.left) * s);
  }
  return out;
}

ResidualReport relation_residual(const ActionModel& model, const WitnessedMatrix& f, const IntVec2& v,
                                 const std::vector<double>& samples) {
  const Word lhs = f.word * z2_word(v.m, v.n) * f.word.inverse();
  const IntVec2 fv = f.matrix * v;
  const Word rhs = z2_word(fv.m, fv.n);
  const int len = static_cast<int>(f.word.size());
  ResidualReport rep;
  double worst = 0;
  for (double x : samples) {
    if (model.depth_at(x) + len > model.depth()) {
      ++rep.flagged;
      continue;
    }
    ++rep.evaluated;
    worst = std::max(worst, model_distance(model, evaluate(model, lhs, x), evaluate(model, rhs, x)));
  }
  if (rep.evaluated > 0) rep.max_residual = worst;
  return rep;
}

ResidualReport relation_residual(const ActionModel& model, const WitnessedMatrix& f, const IntVec2& v,
                                 std::size_t sample_count, std::uint64_t seed) {
  const int safe = model.depth() - static_cast<int>(f.word.size());
  return relation_residual(model, f, v, safe_samples(model, std::max(safe, 0), sample_count, seed));
}

FixedPointReport find_fixed_points(const ActionModel& model, const Word& g, int resolution) {
  if (resolution < 2) throw std::invalid_argument("find_fixed_points: resolution must be >= 2");
  constexpr double kTol = 1e-12;
  const bool circle = model.variant() == Variant::circle;
  auto displacement = [&](double x) {
    return circle ? evaluate_lift(model, g, x) - x : evaluate(model, g, x) - x;
  };
  auto sign_of = [&](double d) { return std::abs(d) <= kTol ? 0 : (d > 0 ? 1 : -1); };

  const int n = circle ? resolution : resolution + 1;
  std::vector<double> xs(static_cast<std::size_t>(n));
  FixedPointReport rep;
  rep.signs.resize(xs.size());
  for (int i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] = static_cast<double>(i) / resolution;
    rep.signs[static_cast<std::size_t>(i)] = sign_of(displacement(xs[static_cast<std::size_t>(i)]));
  }
  rep.whole_space = std::all_of(rep.signs.begin(), rep.signs.end(), [](int s) { return s == 0; });
  if (rep.whole_space) {
    rep.fixed.push_back({0.0, 1.0});
    return rep;
  }

  auto bisect = [&](double a, double b, int sa) {
    for (int it = 0; it < 60; ++it) {
      const double m = 0.5 * (a + b);
      const int sm = sign_of(displacement(m));
      if (sm == 0) return m;
      if (sm == sa) {
        a = m;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  };

  std::size_t i = 0;
  while (i < xs.size()) {
    if (rep.signs[i] == 0) {
      std::size_t j = i;
      while (j + 1 < xs.size() && rep.signs[j + 1] == 0) ++j;
      rep.fixed.push_back({xs[i], xs[j]});
      const bool touches_end = !circle && (i == 0 || j + 1 == xs.size());
      if (!circle && i == 0) rep.endpoint_fixtures.push_back(0.0);
      if (!circle && j + 1 == xs.size()) rep.endpoint_fixtures.push_back(1.0);
      if (!touches_end) rep.interior.push_back(0.5 * (xs[i] + xs[j]));
      i = j + 1;
      continue;
    }
    const bool has_next = i + 1 < xs.size();
    const int s_next = has_next ? rep.signs[i + 1] : (circle ? rep.signs[0] : 0);
    const double x_next = has_next ? xs[i + 1] : 1.0;
    if ((has_next || circle) && s_next != 0 && s_next != rep.signs[i]) {
      double r = bisect(xs[i], x_next, rep.signs[i]);
      if (circle && r >= 1.0) r -= 1.0;
      rep.fixed.push_back({r, r});
      rep.interior.push_back(r);
    }
    ++i;
  }
  return rep;
}

}  // namespace rigid1d
