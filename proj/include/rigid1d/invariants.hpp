#pragma once

/// @file invariants.hpp
/// Translation numbers on the distinguished component, their eigen-decomposition under a
/// hyperbolic f0, the disjointness criterion for f(I), rotation numbers on the circle model
/// and the fixed-point test on the torus.

#include <optional>
#include <stdexcept>
#include <utility>

#include "rigid1d/action_model.hpp"
#include "rigid1d/enclosure.hpp"
#include "rigid1d/sl2z.hpp"

namespace rigid1d {

/// t = 0: (r, s) is orthogonal to the expanding eigenvector, i.e. condition (ii) fails.
class ConditionViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct TranslationData {
  QuadVal r;
  QuadVal s;
  WitnessedMatrix f0;
  EigenData eigen;  ///< eigen-data of f0^{-1}
  /// Coefficients of (1,0) = alpha v_exp + beta v_con.
  QuadVal alpha, beta;
  /// Exact when (r, s) and the eigenvalues share a field (or (r, s) is rational).
  std::optional<QuadVal> t, t_prime;
  Enclosure t_enc, t_prime_enc, lambda_enc;

  bool exact() const { return t.has_value(); }
  QuadVec rs() const { return {r, s}; }
};

/// Throws std::domain_error when f0 is not hyperbolic.
TranslationData make_translation_data(const WitnessedMatrix& f0, const QuadVal& r, const QuadVal& s);

/// m r + n s.
QuadVal translation_number(const TranslationData& td, const IntVec2& v);

/// f0^{-n} (1,0) with unbounded integer entries.
std::pair<BigInt, BigInt> conjugate_vector(const TranslationData& td, long n);

/// <f0^{-n} (1,0), (r,s)> through the integer vector iteration.
QuadVal conjugate_translation_number(const TranslationData& td, long n);
/// lambda^n t + lambda^{-n} t' through the eigen-decomposition; requires td.exact().
QuadVal conjugate_translation_number_eigen(const TranslationData& td, long n);

struct EigenComponents {
  QuadVal t;
  QuadVal t_prime;
};

/// Components of (1,0). Throws ConditionViolation when t == 0, std::domain_error when not exact.
EigenComponents eigen_components(const TranslationData& td);
/// Components of an arbitrary direction v in place of (1,0).
EigenComponents eigen_components(const TranslationData& td, const IntVec2& v);

/// rs is not an eigenvector of f^T.
bool claim1_predicate(const Mat2Z& f, const QuadVec& rs);

struct Claim1Result {
  bool disjoint = false;
  bool depth_flag = false;  ///< the image gap is deeper than the materialized table
  double image_lo = 0;
  double image_hi = 0;
};

/// Whether f applied to the closed gap `component` avoids the open gap.
Claim1Result claim1_empirical(const ActionModel& model, const WitnessedMatrix& f, std::size_t component);

struct Component {
  double lo = 0;
  double hi = 0;
  bool degenerate = true;           ///< a single fixed point of the Z^2 action
  std::optional<std::size_t> gap;  ///< gap index when the component is a materialized gap
};

Component irreducible_component(const ActionModel& model, double x);

struct RotationEstimate {
  double value = 0;  ///< in [0, 1)
  long iterations = 0;
  double error_bound = 0;
};

/// Birkhoff average of the lift of g starting at x0 (default: the middle of I_id).
/// Throws std::invalid_argument on the interval model.
RotationEstimate rotation_number(const ActionModel& model, const Word& g, long iterations,
                                 std::optional<double> x0 = std::nullopt);

/// Distance from a rotation number to 0 on R/Z.
double circle_distance_to_zero(double rho);

/// a r' + c s' == r' and b r' + d s' == s' modulo 1.
bool torus_fixed_point_check(const Mat2Z& f, const QuadVal& r_prime, const QuadVal& s_prime);

}  // namespace rigid1d
