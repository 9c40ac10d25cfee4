#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "rigid1d/certify_kernels.hpp"
#include "rigid1d/rigidity.hpp"

using namespace rigid1d;

namespace {

const QuadVal kSqrt2 = QuadVal::sqrt_of(2);

const RigidityParams& default_params() {
  static const RigidityParams p = tune_parameters(
      make_translation_data(WitnessedMatrix::from_word(Word::parse("g1g2")), QuadVal(1), kSqrt2));
  return p;
}

/// tau_j frozen from a symbolic evaluation of -(f0^{-j}(1,0) . (1, sqrt 2)).
const QuadVal kTau[] = {QuadVal(-1, 2, 2), QuadVal(-5, 12, 2), QuadVal(-29, 70, 2), QuadVal(-169, 408, 2)};
const QuadVal kMinGap(-1, Rational(15, 8), 2);

/// Smallest k >= N with k ln 2 + 3N ln A + (k - N) ln(3/4) + ln |J| > ln |[a,b]|.
int kstar_by_logs(double a, int n, double j, double ab) {
  int k = n;
  while (!(k * std::log(2.0) + 3 * n * std::log(a) + (k - n) * std::log(0.75) + std::log(j) > std::log(ab))) ++k;
  return k;
}

}  // namespace

TEST_CASE("tuning the default data") {
  const RigidityParams& p = default_params();
  CHECK(p.k_h == 1);
  CHECK(p.k_f == 1);
  CHECK(p.h_sign == -1);
  CHECK_FALSE(p.approximate);
  CHECK(*p.lambda == QuadVal(3, 2, 2));
  CHECK(*p.t == QuadVal(0, Rational(1, 4), 2));
  CHECK(*p.t_prime == QuadVal(-1, Rational(-1, 4), 2));
  CHECK(p.mu_j == QuadVal(0, Rational(1, 8), 2));
  CHECK(*p.lambda * *p.t > QuadVal(1));
  CHECK((*p.lambda * *p.t).to_double() == doctest::Approx(2.0607).epsilon(1e-4));
}

TEST_CASE("tuning across quadratic fields falls back to enclosures") {
  // [[1,-1],[-1,2]] has lambda = (3+sqrt 5)/2 while (r, s) lives in Q(sqrt 2).
  const auto td = make_translation_data(WitnessedMatrix{Mat2Z(1, -1, -1, 2), Word()}, QuadVal(1), kSqrt2);
  const RigidityParams p = tune_parameters(td);
  CHECK(p.approximate);
  CHECK(p.lambda_enc.lo() > 2.0);
  CHECK(p.mu_j.sign() > 0);
  for (const auto& c : check_eq2(p, 1, 20)) CHECK(c.pass);
  const auto zero = make_translation_data(
      WitnessedMatrix::from_word(Word::parse("g1g2")), -default_params().td.eigen.v_exp[1],
      default_params().td.eigen.v_exp[0]);
  CHECK_THROWS_AS(tune_parameters(zero), ConditionViolation);
  CHECK_THROWS_AS(tune_parameters(default_params().td, Horizons{40, 40, 0, 0}), std::invalid_argument);
  // Nearly orthogonal (r, s) gives a tiny t that one power of h1 cannot lift past 1/lambda.
  const auto tiny = make_translation_data(WitnessedMatrix::from_word(Word::parse("g1g2")), QuadVal(1, 1, 2),
                                          QuadVal(Rational(101, 100)));
  CHECK_THROWS_AS(tune_parameters(tiny, Horizons{40, 40, 1, 1}), TuningError);
}

TEST_CASE("the growth inequality and the tail bound") {
  const RigidityParams& p = default_params();
  const auto eq2 = check_eq2(p, 1, 1);
  REQUIRE(eq2.size() == 1);
  CHECK(eq2[0].pass);
  CHECK(eq2[0].rhs == doctest::Approx((std::sqrt(2.0) + 2) / 2).epsilon(1e-12));
  CHECK(check_eq2(p, 0, 0)[0].pass);
  const auto eq3 = check_eq3(p, 1, 1);
  CHECK(eq3[0].pass);
  CHECK(eq3[0].lhs == doctest::Approx(0.2322).epsilon(1e-3));
  const auto n0 = check_eq3(p, 0, 0);
  CHECK_FALSE(n0[0].pass);
  CHECK(n0[0].lhs == doctest::Approx(1.35355).epsilon(1e-5));
  // A configuration with lambda t <= 1 fails the growth inequality somewhere.
  RigidityParams weak = p;
  weak.t = QuadVal(0, Rational(1, 20), 2);
  const auto bad = check_eq2(weak, 1, 40);
  CHECK(std::any_of(bad.begin(), bad.end(), [](const InequalityCheck& c) { return !c.pass; }));
}

TEST_CASE("property: tuned parameters pass their own horizons") {
  const RigidityParams& p = default_params();
  for (const auto& c : check_eq2(p, 1, p.horizons.i_max)) CHECK(c.pass);
  for (const auto& c : check_eq3(p, 1, p.horizons.n_max)) CHECK(c.pass);
  // Tail-bound values decrease in n.
  const auto eq3 = check_eq3(p, 1, 20);
  for (std::size_t i = 0; i + 1 < eq3.size(); ++i) CHECK(eq3[i + 1].lhs <= eq3[i].lhs);
  CHECK(eq3.back().lhs > 0.0);
}

TEST_CASE("word enumeration") {
  const RigidityParams& p = default_params();
  for (long j = 1; j <= 4; ++j) CHECK(p.tau(j) == kTau[j - 1]);
  std::vector<QuadVal> seen;
  enumerate_words(p, 2, [&](std::uint32_t, const QuadVal& t) { seen.push_back(t); });
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == QuadVal(0));
  CHECK(seen[1] == kTau[0]);
  CHECK(seen[2] == kTau[1]);
  CHECK(seen[3] == kTau[0] + kTau[1]);
  std::vector<QuadVal> one;
  enumerate_words(p, 1, [&](std::uint32_t, const QuadVal& t) { one.push_back(t); });
  CHECK(one[1] == *p.lambda * *p.t + *p.t_prime / *p.lambda);
}

TEST_CASE("disjointness certificates") {
  const RigidityParams& p = default_params();
  const auto c0 = certify_disjoint(p, 0);
  CHECK(c0.pass);
  CHECK(c0.count() == 1);
  CHECK_FALSE(c0.min_gap.has_value());
  const auto c1 = certify_disjoint(p, 1);
  CHECK(c1.pass);
  CHECK(*c1.min_gap == kTau[0] - p.mu_j);
  for (int k = 1; k <= 7; ++k) {
    const auto c = certify_disjoint(p, k);
    CHECK(c.count() == (std::size_t{1} << k));
    CHECK(*c.min_gap == kMinGap);
  }
  RigidityParams wide = p;
  set_mu_j(wide, QuadVal(2));
  const auto bad = certify_disjoint(wide, 3);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.counterexample.has_value());
  CHECK_THROWS_AS(set_mu_j(wide, QuadVal(0)), std::invalid_argument);
}

TEST_CASE("property: kernels agree with a brute-force sort") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 10);
    std::vector<QuadVal> taus;
    for (int i = 0; i < k; ++i)
      taus.emplace_back(Rational(static_cast<long>(rng() % 21) - 10), Rational(static_cast<long>(rng() % 7) - 3), 2);
    const SortedSums serial = subset_sums_sorted_serial(taus);
    const SortedSums parallel = subset_sums_sorted_parallel(taus, 3);
    CHECK(serial.eps == parallel.eps);
    CHECK(serial.value == parallel.value);
    // Brute force: recompute each sum from its bits, then check the order and tie-break.
    std::vector<std::pair<double, std::uint32_t>> brute;
    for (std::uint32_t e = 0; e < (1u << k); ++e) {
      double s = 0;
      for (int i = 0; i < k; ++i)
        if ((e >> i) & 1u) s += taus[static_cast<std::size_t>(i)].to_double();
      brute.emplace_back(s, e);
    }
    REQUIRE(serial.eps.size() == brute.size());
    for (std::size_t i = 0; i < serial.eps.size(); ++i) {
      const std::uint32_t e = serial.eps[i];
      CHECK(serial.value[i].to_double() == doctest::Approx(brute[e].first).epsilon(1e-12));
      if (i > 0) {
        CHECK(serial.value[i - 1] <= serial.value[i]);
        if (serial.value[i - 1] == serial.value[i]) CHECK(serial.eps[i - 1] < e);
      }
    }
  }
  CHECK_THROWS_AS(subset_sums_sorted_serial(std::vector<QuadVal>(25, QuadVal(1))), std::invalid_argument);
}

TEST_CASE("property: certificates are reproducible and kernel independent") {
  const RigidityParams& p = default_params();
  const auto a = certify_disjoint(p, 10, Kernel::parallel);
  const auto b = certify_disjoint(p, 10, Kernel::serial);
  const auto c = certify_disjoint(p, 10, Kernel::parallel);
  CHECK(a.eps == b.eps);
  CHECK(a.tau == b.tau);
  CHECK(a.eps == c.eps);
  CHECK(*a.min_gap == *b.min_gap);
}

TEST_CASE("separation margins") {
  const RigidityParams& p = default_params();
  const auto m = separation_margins(p, 4);
  REQUIRE(m.size() == 4);
  CHECK(m[0] == QuadVal(-1, Rational(15, 8), 2));
  CHECK(m[1] == QuadVal(-4, Rational(79, 8), 2));
  CHECK(m[2] == QuadVal(-23, Rational(447, 8), 2));
  CHECK(m[3] == QuadVal(-134, Rational(2591, 8), 2));
  for (const auto& v : separation_margins(p, 14)) CHECK(v.sign() > 0);
}

TEST_CASE("property: scaling h1 does not shrink the separation") {
  const RigidityParams& p = default_params();
  RigidityParams doubled = p;
  doubled.k_h = 2;
  doubled.t = *p.t * QuadVal(2);
  doubled.mu_j = p.mu_j * QuadVal(2);
  for (int k = 1; k <= 8; ++k) CHECK(*certify_disjoint(doubled, k).min_gap >= *certify_disjoint(p, k).min_gap);
}

TEST_CASE("Separating words and the geometric cross-check") {
  const RigidityParams& p = default_params();
  CHECK(claim3_word(p, 0, 3).empty());
  CHECK(claim3_word(p, 1, 1) == Word::parse("G2G1 H1 g1g2"));
  CHECK(eps_bits(0b011, 3) == "110");
  const ActionModel m = ActionModel::build(ModelConfig::interval_default(6));
  CHECK(cross_validate_geometric(m, p, 0).agree());
  const auto r3 = cross_validate_geometric(m, p, 3);
  CHECK(r3.words == 8);
  CHECK(r3.ordering_mismatches == 0);
  ModelConfig wrong = ModelConfig::interval_default(6);
  wrong.t1 = QuadVal(3);
  const auto bad = cross_validate_geometric(ActionModel::build(wrong), p, 3);
  CHECK(bad.ordering_mismatches > 0);
}

TEST_CASE("growth contradiction") {
  const auto g = growth_contradiction(Rational(1, 2), 4, Rational(1, 100), Rational(1));
  CHECK(g.k_star == 30);
  CHECK(g.k_star == kstar_by_logs(0.5, 4, 0.01, 1));
  CHECK(Rational(1 << 30) * g.bound_at_k_star > 0);
  CHECK(growth_bound(Rational(1, 2), 4, Rational(1, 100), 30) > 1);
  CHECK(growth_bound(Rational(1, 2), 4, Rational(1, 100), 29) <= 1);
  // |J| = |[a,b]| with A = 1 is immediate.
  CHECK(growth_contradiction(Rational(99, 100), 0, Rational(1), Rational(1)).k_star == 1);
  CHECK(growth_contradiction(Rational(999999, 1000000), 0, Rational(1, 10), Rational(1)).k_star ==
        kstar_by_logs(0.999999, 0, 0.1, 1));
  CHECK_THROWS_AS(growth_contradiction(Rational(1), 4, Rational(1, 100), Rational(1)), std::invalid_argument);
}

TEST_CASE("property: growth k* is monotone on a 5x5 grid") {
  const Rational js[] = {Rational(1, 1000), Rational(1, 200), Rational(1, 100), Rational(1, 20), Rational(1, 4)};
  const Rational abs[] = {Rational(1, 2), Rational(1), Rational(2), Rational(5), Rational(10)};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const int k = growth_contradiction(Rational(1, 2), 4, js[i], abs[j]).k_star;
      CHECK(k == kstar_by_logs(0.5, 4, js[i].get_d(), abs[j].get_d()));
      if (i + 1 < 5) CHECK(growth_contradiction(Rational(1, 2), 4, js[i + 1], abs[j]).k_star <= k);
      if (j + 1 < 5) CHECK(growth_contradiction(Rational(1, 2), 4, js[i], abs[j + 1]).k_star >= k);
    }
}

TEST_CASE("flat germ probe") {
  const auto id = flat_germ_probe([](const BigReal& d) { return d; });
  for (double q : id.quotients) CHECK(q == doctest::Approx(1.0).epsilon(1e-12));
  const auto lin = flat_germ_probe([](const BigReal& d) { return d * BigReal(2.0); });
  CHECK(lin.monotone_toward_one);
  CHECK(lin.final_deviation <= 0.05);
  const auto left = flat_germ_probe([](const BigReal& d) { return d * BigReal(2.0); }, true);
  CHECK(left.monotone_toward_one);
  CHECK_THROWS_AS(flat_germ_probe([](const BigReal& d) { return d + BigReal(0.1); }), std::invalid_argument);
}

TEST_CASE("interior fixed element search") {
  const ActionModel m = ActionModel::build(ModelConfig::interval_default(4));
  const QuadVec rs = {QuadVal(1), kSqrt2};
  const auto found = interior_fixed_element_search(m, rs, 3);
  REQUIRE(found.has_value());
  CHECK(conditions_check(found->element.matrix, rs).all());
  CHECK(found->location > 0.0);
  CHECK(found->location < 1.0);
  CHECK(std::abs(evaluate(m, found->element.word, found->location) - found->location) <= 1e-9);
  CHECK_FALSE(interior_fixed_element_search(m, rs, 0).has_value());
  CHECK_THROWS_AS(interior_fixed_element_search(ActionModel::build(ModelConfig::circle_default(2)), rs, 3),
                  std::invalid_argument);
}
