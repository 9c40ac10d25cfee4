#pragma once

/// @file rigidity.hpp
/// Parameter tuning for the quantitative rigidity argument and its certificates.
///
/// All separating words lie in Z^2 and fix the distinguished gap I, so the image of J under
/// W_eps is J translated by tau(W_eps) in the invariant-measure coordinate. Pairwise
/// disjointness of the 2^k images is therefore an exact comparison of sorted subset sums
/// of tau_1..tau_k against mu(J).

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigid1d/action_model.hpp"
#include "rigid1d/big_real.hpp"
#include "rigid1d/enclosure.hpp"
#include "rigid1d/invariants.hpp"

namespace rigid1d {

/// No (k_h, k_f) within the horizons satisfies every requirement.
class TuningError : public std::runtime_error {
 public:
  TuningError(const std::string& what, std::string last_failure)
      : std::runtime_error(what), last_failure_(std::move(last_failure)) {}
  const std::string& last_failure() const { return last_failure_; }

 private:
  std::string last_failure_;
};

struct Horizons {
  int n_max = 40;
  int i_max = 40;
  int k_h_max = 8;
  int k_f_max = 8;
};

struct RigidityParams {
  TranslationData td;
  int k_h = 1;
  int k_f = 1;
  int h_sign = 1;             ///< h1 is replaced by h1^{h_sign * k_h}
  bool approximate = false;   ///< lambda and t are certified enclosures only
  // Exact effective values (empty when approximate).
  std::optional<QuadVal> lambda, t, t_prime;
  Enclosure lambda_enc, t_enc, t_prime_enc;
  /// mu(J); J is centred at s = 1/2 of I_id. Always exact (a rational lower bound of t/2 when approximate).
  QuadVal mu_j;
  Horizons horizons;

  /// tau of the j-th separating factor f0^{-j k_f} h1^{h_sign k_h} f0^{j k_f}, exactly.
  QuadVal tau(long j) const;
  std::string summary() const;
};

struct InequalityCheck {
  int index = 0;
  bool pass = false;
  double lhs = 0;
  double rhs = 0;
};

/// Smallest (k_h, k_f) in lexicographic order meeting lambda > 2, lambda t > 1, 0 < mu(J) < t,
/// the growth inequality for 1 <= i <= i_max and the tail bound for 1 <= n <= n_max.
/// Throws ConditionViolation when t == 0 and TuningError on exhaustion.
RigidityParams tune_parameters(const TranslationData& td, const Horizons& horizons = {});

/// Overrides mu(J) after tuning; throws std::invalid_argument unless mu > 0.
void set_mu_j(RigidityParams& params, const QuadVal& mu);

/// i <= t [lambda^i - (lambda^i - 1) / (lambda - 1)] for i in [first, last].
std::vector<InequalityCheck> check_eq2(const RigidityParams& params, int first, int last);
/// |tau(n) - lambda^n t| = |lambda^{-n} t'| <= 1 for n in [first, last].
std::vector<InequalityCheck> check_eq3(const RigidityParams& params, int first, int last);

/// Streams (eps, tau(W_eps)) in binary counting order, eps_1 the least significant bit.
void enumerate_words(const RigidityParams& params, int k,
                     const std::function<void(std::uint32_t eps, const QuadVal& tau)>& visit);

struct DisjointnessCertificate {
  int k = 0;
  QuadVal mu_j;
  std::vector<std::uint32_t> eps;  ///< sorted by tau
  std::vector<QuadVal> tau;
  bool pass = true;
  /// min over consecutive differences of (difference - mu(J)); empty when k == 0.
  std::optional<QuadVal> min_gap;
  /// First consecutive pair whose difference is <= mu(J).
  std::optional<std::pair<std::uint32_t, std::uint32_t>> counterexample;

  std::size_t count() const { return eps.size(); }
};

enum class Kernel { serial, parallel };

DisjointnessCertificate certify_disjoint(const RigidityParams& params, int k, Kernel kernel = Kernel::parallel);
DisjointnessCertificate certify_disjoint_serial(const RigidityParams& params, int k);

/// tau_i - sum_{j<i} tau_j - mu(J) for i = 1..k.
std::vector<QuadVal> separation_margins(const RigidityParams& params, int k);

/// eps as the bit string eps_1 eps_2 ... eps_k.
std::string eps_bits(std::uint32_t eps, int k);

/// The word W_eps over the model alphabet.
Word claim3_word(const RigidityParams& params, std::uint32_t eps, int k);

struct CrossValidationReport {
  int k = 0;
  std::size_t words = 0;
  std::size_t ordering_mismatches = 0;
  std::size_t value_mismatches = 0;
  std::size_t depth_flags = 0;  ///< words whose conjugators exceed the materialized depth
  double max_value_error = 0;
  bool agree() const { return ordering_mismatches == 0 && value_mismatches == 0; }
};

/// Evaluates every W_eps on the endpoints of J in the model and compares with the exact values.
CrossValidationReport cross_validate_geometric(const ActionModel& model, const RigidityParams& params, int k);

struct GrowthCertificate {
  Rational a;
  int n = 0;
  Rational j_length;
  Rational ambient;
  int k_star = 0;
  Rational bound_at_k_star;  ///< 2^k A^{3N} (3/4)^{k-N} |J| at k = k*
};

/// 2^k A^{3N} (3/4)^{k-N} |J| for k >= N.
Rational growth_bound(const Rational& a, int n, const Rational& j_length, int k);

/// Minimal k >= N whose bound exceeds |[a,b]|. Requires 0 < A < 1, N >= 0, |J| > 0, |[a,b]| > 0.
GrowthCertificate growth_contradiction(const Rational& a, int n, const Rational& j_length, const Rational& ambient);

/// A germ at a written in the local coordinate delta = x - a: f_local(delta) = f(a + delta) - a.
using LocalMap = std::function<BigReal(const BigReal&)>;

struct FlatGermReport {
  bool reversed = false;
  std::vector<double> scales;
  std::vector<double> quotients;  ///< (G(a +- h) - a) / (+-h) for G = g^{-1} f g
  bool monotone_toward_one = false;
  double final_deviation = 0;
};

/// Conjugates f by g(x) = a + e^{-1/(x-a)^2} (a - e^{-1/(x-a)^2} on the left when reversed)
/// and reports one-sided difference quotients at scales 1e-2 ... 1e-5.
/// Throws std::invalid_argument when f(a) != a.
FlatGermReport flat_germ_probe(const LocalMap& f, bool reversed = false);

struct InteriorFixedElement {
  WitnessedMatrix element;
  double location = 0;
};

/// First element in search order that passes conditions (i)-(iii) and has a fixed point
/// strictly inside ]0,1[ of the interval model. Throws std::invalid_argument on the circle model.
std::optional<InteriorFixedElement> interior_fixed_element_search(const ActionModel& model, const QuadVec& rs,
                                                                  int max_len, int resolution = 1024);

}  // namespace rigid1d
