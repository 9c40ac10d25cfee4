#pragma once

/// @file ping_pong.hpp
/// Exact ping-pong certificates for two-generator subgroups of SL(2,Z) acting on RP^1.
///
/// RP^1 is coordinatised by z = x/y, so f acts by z -> (az+b)/(cz+d) and preserves
/// the cyclic order of R u {inf}. A certificate is four pairwise disjoint arcs
/// (attracting/repelling for each generator) with exact rational or infinite
/// endpoints. For every letter l and every arc S other than the repelling arc of l,
/// l(S) must lie in the attracting arc of l; that table implies freeness.

#include <optional>
#include <string>

#include "rigid1d/mat2.hpp"
#include "rigid1d/quad.hpp"

namespace rigid1d {

struct ProjPoint {
  Rational value;
  bool infinite = false;

  static ProjPoint inf() { return {Rational(0), true}; }
  static ProjPoint at(const Rational& q) { return {q, false}; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  std::string to_string() const;
};

ProjPoint mobius(const Mat2Z& f, const ProjPoint& z);

/// Arc from `start` to `end` in the positive cyclic direction (increasing z, through inf).
/// Parabolic fixed points sit on an arc boundary, so endpoints carry open/closed flags.
struct Arc {
  ProjPoint start;
  ProjPoint end;
  bool start_closed = false;
  bool end_closed = false;

  bool contains(const ProjPoint& z) const;
  bool subset_of(const Arc& other) const;
  bool disjoint_from(const Arc& other) const;
  Arc image(const Mat2Z& f) const { return {mobius(f, start), mobius(f, end), start_closed, end_closed}; }
  std::string to_string() const;
};

struct PingPongCertificate {
  Mat2Z g1;
  Mat2Z g2;
  Arc attract1, repel1, attract2, repel2;

  std::string to_string() const;
};

/// Searches arc radii m/resolution (m = 1 .. max_radius*resolution) around the generators'
/// fixed points. Returns nullopt when no certificate is found at that resolution.
std::optional<PingPongCertificate> ping_pong_certify(const Mat2Z& g1, const Mat2Z& g2, int resolution = 8,
                                                     int max_radius = 4);

/// Replays a certificate: disjointness plus the twelve exact arc-image inclusions.
bool verify_ping_pong(const PingPongCertificate& cert);

}  // namespace rigid1d
