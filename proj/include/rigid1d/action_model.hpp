#pragma once

/// @file action_model.hpp
/// Blown-up actions of F2 x| Z^2 on the interval and of the Sanov subgroup of SL(2,Z) x| Z^2
/// on the circle.
///
/// Model space is [0,1] (interval) or R/Z (circle). Every orbit point w(p), |w| <= depth,
/// is replaced by a gap I_w of length scale * ratio^|w|. Inside a gap the relative
/// position s in [0,1] is carried through the chart psi(s) = tan(pi (s - 1/2)); matrix
/// letters move gaps affinely (s is preserved) and h-letters flow inside gap I_M by time
/// <M^{-1} v, (t1, t2)>, fixing every point outside the gaps.
///
/// Points are evaluated symbolically: a gap point remembers its label even when the label
/// is deeper than the materialized table, and only collapses to the base point of that
/// label when converted back to a coordinate.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rigid1d/big_real.hpp"
#include "rigid1d/mat2.hpp"
#include "rigid1d/quad.hpp"
#include "rigid1d/sl2z.hpp"
#include "rigid1d/word.hpp"

namespace rigid1d {

/// Raised when a model cannot be built (stabilizer collision, unresolved orbit order).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Variant { circle, interval };

std::string to_string(Variant v);
Variant parse_variant(std::string_view text);

/// Gap length scale * ratio^|w|.
struct GapSchedule {
  Rational scale{1, 10};
  Rational ratio{1, 4};

  Rational length(int depth) const;
  /// Number of reduced words of length n over four letters: 1, 4, 12, 36, ...
  static BigInt words_of_length(int n);
  /// Sum over words of length <= depth.
  Rational materialized_total(int depth) const;
  /// Sum over all reduced words; requires summable().
  Rational infinite_total() const;
  /// 0 < ratio, 3 * ratio < 1 and scale > 0.
  bool summable() const;
};

/// Circle: the ray through (1, sigma). Interval: the real number sigma before charting into ]0,1[.
struct BasePoint {
  bool is_pi = true;
  QuadVal value;

  static BasePoint pi() { return {true, QuadVal()}; }
  static BasePoint exact(const QuadVal& v) { return {false, v}; }
  double to_double() const;
  std::string to_string() const;
  /// "pi" or any QuadVal text.
  static BasePoint parse(std::string_view text);
  friend bool operator==(const BasePoint& a, const BasePoint& b) {
    return a.is_pi == b.is_pi && (a.is_pi || a.value == b.value);
  }
};

/// The chart psi: ]0,1[ -> R and the flow phi^t(s) = psi^{-1}(psi(s) + t).
struct FlowChart {
  static double psi(double s);
  static double psi_inv(double y);
  static double flow(double s, double t) { return psi_inv(psi(s) + t); }
};

struct ModelConfig {
  Variant variant = Variant::interval;
  int depth = 3;
  GapSchedule schedule;
  BasePoint base_point = BasePoint::pi();
  QuadVal t1{1};
  QuadVal t2 = QuadVal::sqrt_of(2);

  static ModelConfig circle_default(int depth = 3);
  static ModelConfig interval_default(int depth = 3);
};

struct Gap {
  Word word;
  Mat2Z label;
  int depth = 0;
  Rational length;
  double left = 0;
  double right = 0;
  double base_u = 0;  ///< position of w(p) in the unblown coordinate
};

/// A point of the model, tracked symbolically.
struct SymPoint {
  bool in_gap = false;
  // Gap points.
  Mat2Z label;
  Word word;
  int label_depth = 0;
  double y = 0;  ///< psi(s); +-infinity for the gap endpoints
  // Base points: ray (vx, vy) on the circle, real number x on the interval.
  double vx = 1, vy = 0;
  BigReal x{0.0};
  // Circle lift: accumulated base angle in turns.
  double turns = 0;
};

class ActionModel {
 public:
  static ActionModel build(const ModelConfig& config);

  const ModelConfig& config() const { return config_; }
  Variant variant() const { return config_.variant; }
  int depth() const { return config_.depth; }
  const std::vector<Gap>& gaps() const { return gaps_; }
  const Gap& identity_gap() const { return gaps_[identity_index_]; }
  std::size_t identity_index() const { return identity_index_; }
  std::optional<std::size_t> find_gap(const Mat2Z& label) const;
  Rational materialized_length() const { return total_; }
  /// Total length of the gaps that were not materialized.
  Rational truncation_residual() const;
  double t1() const { return t1_; }
  double t2() const { return t2_; }

  /// Coordinate -> symbolic point. On the circle x may be any real; its integer part
  /// becomes the lift offset.
  SymPoint decode(double x) const;
  /// Symbolic point -> coordinate in [0,1] (interval) or [0,1) (circle).
  double encode(const SymPoint& p) const;
  /// Lifted coordinate on the circle; equals encode() on the interval.
  double encode_lift(const SymPoint& p) const;
  /// Applies the word right-to-left.
  SymPoint apply(const Word& w, SymPoint p) const;

  /// The point w(p) of the base action, as a ray angle in turns (circle) or a real (interval).
  double base_u_of(const Mat2Z& label) const;

  /// Gap point with chart coordinate y in the gap labelled `label`.
  SymPoint gap_point(const Mat2Z& label, double y) const;

  /// Depth of the label of the gap containing x, 0 for points outside every gap.
  int depth_at(double x) const;

 private:
  void build_circle();
  void build_interval();
  void layout(std::vector<Gap> sorted);
  double position_of_u(double u, std::size_t gaps_before) const;
  double encode_base(const SymPoint& p) const;
  void apply_matrix_letter(Letter l, SymPoint& p) const;
  void apply_flow(const IntVec2& v, SymPoint& p) const;
  BigReal orbit_point(const Word& w) const;
  std::size_t gaps_left_of_interval_x(const BigReal& x) const;
  std::size_t gaps_left_of_u(double u) const;

  ModelConfig config_;
  std::vector<Gap> gaps_;
  std::vector<double> prefix_;        // prefix_[k] = sum of lengths of gaps 0..k-1
  std::vector<BigReal> interval_keys_;  // interval: lower bound of w(p) per gap
  std::unordered_map<Mat2Z, std::size_t> index_;
  std::size_t identity_index_ = 0;
  Rational total_;
  double total_d_ = 0;
  double t1_ = 1, t2_ = 0;
  double px_ = 1, py_ = 0;  // circle base ray, normalised
};

ActionModel build_circle_model(int depth, const GapSchedule& schedule, const BasePoint& p);
ActionModel build_interval_model(int depth, const GapSchedule& schedule, const BasePoint& p);

/// evaluate(g, x) with x a model coordinate; result in the model space.
double evaluate(const ActionModel& model, const Word& g, double x);
/// Lift of g to R on the circle model (identical to evaluate on the interval).
double evaluate_lift(const ActionModel& model, const Word& g, double x);

/// Circular distance on the circle, absolute difference on the interval.
double model_distance(const ActionModel& model, double x, double y);

/// Deterministic sample coordinates: a fraction `nongap_fraction` outside every gap, the
/// rest at relative positions in [0.05, 0.95] of gaps of depth <= max_depth.
std::vector<double> safe_samples(const ActionModel& model, int max_depth, std::size_t count, std::uint64_t seed,
                                 double nongap_fraction = 0.2);

struct ResidualReport {
  std::optional<double> max_residual;  ///< empty when every sample was flagged
  std::size_t evaluated = 0;
  std::size_t flagged = 0;
};

/// max |f h_v f^{-1}(x) - h_{f v}(x)| over the samples whose depth + |f| <= model depth.
ResidualReport relation_residual(const ActionModel& model, const WitnessedMatrix& f, const IntVec2& v,
                                 const std::vector<double>& samples);
ResidualReport relation_residual(const ActionModel& model, const WitnessedMatrix& f, const IntVec2& v,
                                 std::size_t sample_count, std::uint64_t seed = 0);

struct FixedInterval {
  double lo = 0;
  double hi = 0;  ///< lo == hi for isolated fixed points
};

struct FixedPointReport {
  bool whole_space = false;
  std::vector<FixedInterval> fixed;   ///< every fixed point or run of fixed grid samples
  std::vector<double> interior;       ///< fixed points strictly inside ]0,1[ away from endpoint runs
  std::vector<double> endpoint_fixtures;
  std::vector<int> signs;             ///< sign of the displacement on the grid
  bool has_interior() const { return !interior.empty(); }
};

/// Sign-change bisection on g(x) - x (the lift displacement on the circle) over a grid of
/// `resolution` cells.
FixedPointReport find_fixed_points(const ActionModel& model, const Word& g, int resolution = 2048);

}  // namespace rigid1d
