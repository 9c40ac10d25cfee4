#include "rigid1d/invariants.hpp"

#include <cmath>

namespace rigid1d {

namespace {

Enclosure enclose_dot(const QuadVec& v, const QuadVec& w) {
  return Enclosure::of(v[0]) * Enclosure::of(w[0]) + Enclosure::of(v[1]) * Enclosure::of(w[1]);
}

bool same_field(const QuadVal& a, const QuadVal& b) { return a.field() == 0 || b.field() == 0 || a.field() == b.field(); }

bool is_integer(const QuadVal& v) { return v.is_rational() && v.rational_part().get_den() == 1; }

}  // namespace

TranslationData make_translation_data(const WitnessedMatrix& f0, const QuadVal& r, const QuadVal& s) {
  TranslationData td;
  td.r = r;
  td.s = s;
  td.f0 = f0;
  td.eigen = eigen_decompose(f0.matrix.inverse());
  const QuadVec& ve = td.eigen.v_exp;
  const QuadVec& vc = td.eigen.v_con;
  const QuadVal det = cross(ve, vc);
  const QuadVec e1{QuadVal(1), QuadVal(0)};
  td.alpha = cross(e1, vc) / det;
  td.beta = cross(ve, e1) / det;
  td.lambda_enc = Enclosure::of(td.eigen.lambda_exp);
  const bool exact = same_field(r, s) && same_field(r, td.eigen.lambda_exp) && same_field(s, td.eigen.lambda_exp);
  if (exact) {
    td.t = td.alpha * dot(ve, td.rs());
    td.t_prime = td.beta * dot(vc, td.rs());
    td.t_enc = Enclosure::of(*td.t);
    td.t_prime_enc = Enclosure::of(*td.t_prime);
  } else {
    td.t_enc = Enclosure::of(td.alpha) * enclose_dot(ve, td.rs());
    td.t_prime_enc = Enclosure::of(td.beta) * enclose_dot(vc, td.rs());
  }
  return td;
}

QuadVal translation_number(const TranslationData& td, const IntVec2& v) {
  return QuadVal(Rational(BigInt(v.m))) * td.r + QuadVal(Rational(BigInt(v.n))) * td.s;
}

std::pair<BigInt, BigInt> conjugate_vector(const TranslationData& td, long n) {
  if (n < 0) throw std::invalid_argument("conjugate_vector: n must be >= 0");
  const Mat2Z inv = td.f0.matrix.inverse();
  BigInt x = 1, y = 0;
  for (long i = 0; i < n; ++i) {
    BigInt nx = BigInt(inv.a()) * x + BigInt(inv.b()) * y;
    BigInt ny = BigInt(inv.c()) * x + BigInt(inv.d()) * y;
    x = std::move(nx);
    y = std::move(ny);
  }
  return {x, y};
}

QuadVal conjugate_translation_number(const TranslationData& td, long n) {
  const auto [x, y] = conjugate_vector(td, n);
  return QuadVal(Rational(x)) * td.r + QuadVal(Rational(y)) * td.s;
}

QuadVal conjugate_translation_number_eigen(const TranslationData& td, long n) {
  if (!td.exact()) throw std::domain_error("conjugate_translation_number_eigen: translation data is not exact");
  if (n < 0) throw std::invalid_argument("conjugate_translation_number_eigen: n must be >= 0");
  const auto un = static_cast<unsigned>(n);
  return td.eigen.lambda_exp.pow(un) * *td.t + td.eigen.lambda_con.pow(un) * *td.t_prime;
}

EigenComponents eigen_components(const TranslationData& td, const IntVec2& v) {
  if (!td.exact()) throw std::domain_error("eigen_components: (r, s) and f0 live in different quadratic fields");
  const QuadVal scale_m(Rational(BigInt(v.m))), scale_n(Rational(BigInt(v.n)));
  // v = m e1 + n e2; decompose e2 as well.
  const QuadVec& ve = td.eigen.v_exp;
  const QuadVec& vc = td.eigen.v_con;
  const QuadVal det = cross(ve, vc);
  const QuadVec e2{QuadVal(0), QuadVal(1)};
  const QuadVal alpha2 = cross(e2, vc) / det;
  const QuadVal beta2 = cross(ve, e2) / det;
  const QuadVal a = scale_m * td.alpha + scale_n * alpha2;
  const QuadVal b = scale_m * td.beta + scale_n * beta2;
  EigenComponents out{a * dot(ve, td.rs()), b * dot(vc, td.rs())};
  if (out.t.is_zero())
    throw ConditionViolation("t = 0: (r, s) = (" + td.r.to_string() + ", " + td.s.to_string() +
                             ") is orthogonal to the expanding eigenvector of f0^{-1} (condition (ii) fails)");
  return out;
}

EigenComponents eigen_components(const TranslationData& td) { return eigen_components(td, IntVec2{1, 0}); }

bool claim1_predicate(const Mat2Z& f, const QuadVec& rs) { return !eigenvector_test(f.transpose(), rs); }

Claim1Result claim1_empirical(const ActionModel& model, const WitnessedMatrix& f, std::size_t component) {
  const Gap& g = model.gaps().at(component);
  const double inf = std::numeric_limits<double>::infinity();
  const SymPoint lo = model.apply(f.word, model.gap_point(g.label, -inf));
  const SymPoint hi = model.apply(f.word, model.gap_point(g.label, inf));
  Claim1Result res;
  res.image_lo = model.encode(lo);
  res.image_hi = model.encode(hi);
  res.depth_flag = g.depth + static_cast<int>(f.word.size()) > model.depth();
  auto overlaps = [&](double a, double b) { return std::max(a, g.left) < std::min(b, g.right); };
  if (res.image_lo <= res.image_hi) {
    res.disjoint = !overlaps(res.image_lo, res.image_hi);
  } else {
    // Image arc wraps through 0 on the circle.
    res.disjoint = !overlaps(res.image_lo, 1.0) && !overlaps(0.0, res.image_hi);
  }
  return res;
}

Component irreducible_component(const ActionModel& model, double x) {
  const SymPoint p = model.decode(x);
  Component c;
  if (p.in_gap) {
    if (auto k = model.find_gap(p.label)) {
      const Gap& g = model.gaps()[*k];
      // Gap endpoints belong to the fixed set.
      if (x > g.left && x < g.right) {
        c.lo = g.left;
        c.hi = g.right;
        c.degenerate = false;
        c.gap = *k;
        return c;
      }
    }
  }
  c.lo = c.hi = x;
  return c;
}

RotationEstimate rotation_number(const ActionModel& model, const Word& g, long iterations, std::optional<double> x0) {
  if (model.variant() != Variant::circle) throw std::invalid_argument("rotation_number: needs the circle model");
  if (iterations < 2) throw std::invalid_argument("rotation_number: iterations must be >= 2");
  RotationEstimate est;
  est.iterations = iterations;
  est.error_bound = 1.0 / static_cast<double>(iterations);
  if (g.empty()) return est;
  const Gap& id = model.identity_gap();
  const double start = x0.value_or(0.5 * (id.left + id.right));
  double x = start;
  double half_rho = 0;
  for (long i = 1; i <= iterations; ++i) {
    x = evaluate_lift(model, g, x);
    if (i == iterations / 2) half_rho = (x - start) / static_cast<double>(i);
  }
  const double rho = (x - start) / static_cast<double>(iterations);
  // |rho_n - rho| <= 1/n for any lift, so doubling moves the estimate by at most 1/n + 2/n.
  if (std::abs(rho - half_rho) > 3.0 / static_cast<double>(iterations) + 1e-12)
    throw std::logic_error("rotation_number: estimate moved beyond its bound when the iteration count doubled");
  est.value = rho - std::floor(rho);
  if (est.value >= 1) est.value = 0;
  return est;
}

double circle_distance_to_zero(double rho) {
  const double r = rho - std::floor(rho);
  return std::min(r, 1 - r);
}

bool torus_fixed_point_check(const Mat2Z& f, const QuadVal& rp, const QuadVal& sp) {
  const QuadVal a(Rational(BigInt(f.a()))), b(Rational(BigInt(f.b()))), c(Rational(BigInt(f.c()))),
      d(Rational(BigInt(f.d())));
  return is_integer(a * rp + c * sp - rp) && is_integer(b * rp + d * sp - sp);
}

}  // namespace rigid1d
