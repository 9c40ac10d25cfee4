#include "rigid1d/ping_pong.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "rigid1d/sl2z.hpp"

namespace rigid1d {

namespace {

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

std::string ProjPoint::to_string() const { return infinite ? "inf" : value.get_str(); }

ProjPoint mobius(const Mat2Z& f, const ProjPoint& z) {
  if (z.infinite) {
    if (f.c() == 0) return ProjPoint::inf();
    return ProjPoint::at(ratio(f.a(), f.c()));
  }
  const Rational den = Rational(f.c()) * z.value + f.d();
  if (den == 0) return ProjPoint::inf();
  Rational out = (Rational(f.a()) * z.value + f.b()) / den;
  out.canonicalize();
  return ProjPoint::at(out);
}

namespace {

// Total order on R u {inf} with inf on top.
int compare_points(const ProjPoint& a, const ProjPoint& b) {
  if (a.infinite || b.infinite) return static_cast<int>(a.infinite) - static_cast<int>(b.infinite);
  return cmp(a.value, b.value) < 0 ? -1 : (a.value == b.value ? 0 : 1);
}

// Position of z on the circle cut open at `origin`; origin itself is the minimum.
struct CyclicPos {
  bool wrapped;
  const ProjPoint* point;
};

int compare_pos(const CyclicPos& x, const CyclicPos& y) {
  if (x.wrapped != y.wrapped) return x.wrapped ? 1 : -1;
  return compare_points(*x.point, *y.point);
}

CyclicPos position(const ProjPoint& origin, const ProjPoint& z) {
  return {compare_points(z, origin) < 0, &z};
}

}  // namespace

bool Arc::contains(const ProjPoint& z) const {
  if (z == start) return start_closed;
  if (z == end) return end_closed;
  return compare_pos(position(start, z), position(start, end)) < 0;
}

bool Arc::subset_of(const Arc& other) const {
  if (start == end) return false;
  const CyclicPos ps = position(other.start, start);
  const CyclicPos pe = position(other.start, end);
  const CyclicPos limit = position(other.start, other.end);
  // Must travel forward from start to end without passing other.start again.
  if (end == other.start) return false;
  if (compare_pos(ps, pe) >= 0) return false;
  if (compare_pos(pe, limit) > 0) return false;
  if (start == other.start && start_closed && !other.start_closed) return false;
  if (end == other.end && end_closed && !other.end_closed) return false;
  if (start == other.end) return false;
  return true;
}

bool Arc::disjoint_from(const Arc& other) const {
  const Arc complement{other.end, other.start, !other.end_closed, !other.start_closed};
  return subset_of(complement);
}

std::string Arc::to_string() const {
  return std::string(start_closed ? "[" : "(") + start.to_string() + ", " + end.to_string() + (end_closed ? "]" : ")");
}

std::string PingPongCertificate::to_string() const {
  std::ostringstream os;
  os << "g1 " << g1.to_string() << " attract " << attract1.to_string() << " repel " << repel1.to_string() << "\n"
     << "g2 " << g2.to_string() << " attract " << attract2.to_string() << " repel " << repel2.to_string() << "\n";
  return os.str();
}

bool verify_ping_pong(const PingPongCertificate& c) {
  const std::array<const Arc*, 4> arcs = {&c.attract1, &c.repel1, &c.attract2, &c.repel2};
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (!arcs[i]->disjoint_from(*arcs[j])) return false;

  struct Move {
    Mat2Z map;
    const Arc* target;
    const Arc* forbidden;
  };
  const std::array<Move, 4> moves = {Move{c.g1, &c.attract1, &c.repel1}, Move{c.g1.inverse(), &c.repel1, &c.attract1},
                                     Move{c.g2, &c.attract2, &c.repel2}, Move{c.g2.inverse(), &c.repel2, &c.attract2}};
  for (const auto& mv : moves) {
    for (const Arc* s : arcs) {
      if (s == mv.forbidden) continue;
      if (!s->image(mv.map).subset_of(*mv.target)) return false;
    }
  }
  return true;
}

namespace {

struct ArcPair {
  Arc attract;
  Arc repel;
};

Rational floor_scaled(const QuadVal& z, int resolution) {
  // floor(z * resolution) / resolution, decided exactly.
  const QuadVal scaled = z * QuadVal(resolution);
  BigInt k(static_cast<long>(std::floor(scaled.to_double())));
  while (QuadVal(Rational(k)) > scaled) k -= 1;
  while (QuadVal(Rational(k + 1)) <= scaled) k += 1;
  return ratio(k, resolution);
}

std::optional<ArcPair> candidate_arcs(const Mat2Z& g_in, int m, int resolution) {
  const Mat2Z g = g_in.trace() < 0 ? Mat2Z(-g_in.a(), -g_in.b(), -g_in.c(), -g_in.d()) : g_in;
  const Rational delta = ratio(m, resolution);
  if (is_hyperbolic(g)) {
    // Fixed points (a - d +- sqrt(disc)) / (2c); c != 0 for hyperbolic elements.
    const std::int64_t tr = g.trace();
    const QuadVal root = QuadVal::sqrt_of(tr * tr - 4);
    const QuadVal base(ratio(g.a() - g.d(), 2 * g.c()));
    const QuadVal scale(ratio(1, 2 * g.c()));
    const QuadVal z1 = base + root * scale;
    const QuadVal z2 = base - root * scale;
    // Attracting fixed point: eigenvalue c*z + d of modulus > 1.
    const QuadVal mult1 = QuadVal(g.c()) * z1 + QuadVal(g.d());
    const bool first_attracts = mult1.abs() > QuadVal(1);
    auto around = [&](const QuadVal& z) {
      const Rational lo = floor_scaled(z, resolution) - delta;
      const Rational hi = floor_scaled(z, resolution) + Rational(1, resolution) + delta;
      return Arc{ProjPoint::at(lo), ProjPoint::at(hi), true, true};
    };
    return ArcPair{around(first_attracts ? z1 : z2), around(first_attracts ? z2 : z1)};
  }
  if (is_parabolic(g)) {
    if (g.c() == 0) {
      const Rational rho = delta;
      if (g.b() > 0)
        return ArcPair{Arc{ProjPoint::at(rho), ProjPoint::inf(), false, true},
                       Arc{ProjPoint::inf(), ProjPoint::at(-rho), false, false}};
      return ArcPair{Arc{ProjPoint::inf(), ProjPoint::at(-rho), true, false},
                     Arc{ProjPoint::at(rho), ProjPoint::inf(), false, false}};
    }
    const Rational q = ratio(g.a() - g.d(), 2 * g.c());
    // g(z) - z = -c (z - q)^2 / (cz + d) with cq + d = 1: points drift in direction -sign(c).
    if (g.c() > 0)
      return ArcPair{Arc{ProjPoint::at(q), ProjPoint::at(q + delta), true, false},
                     Arc{ProjPoint::at(q - delta), ProjPoint::at(q), false, false}};
    return ArcPair{Arc{ProjPoint::at(q - delta), ProjPoint::at(q), false, true},
                   Arc{ProjPoint::at(q), ProjPoint::at(q + delta), false, false}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<PingPongCertificate> ping_pong_certify(const Mat2Z& g1, const Mat2Z& g2, int resolution, int max_radius) {
  const int steps = resolution * max_radius;
  for (int m1 = 1; m1 <= steps; ++m1) {
    const auto p1 = candidate_arcs(g1, m1, resolution);
    if (!p1) return std::nullopt;
    for (int m2 = 1; m2 <= steps; ++m2) {
      const auto p2 = candidate_arcs(g2, m2, resolution);
      if (!p2) return std::nullopt;
      PingPongCertificate cert{g1, g2, p1->attract, p1->repel, p2->attract, p2->repel};
      if (verify_ping_pong(cert)) return cert;
    }
  }
  return std::nullopt;
}

}  // namespace rigid1d
