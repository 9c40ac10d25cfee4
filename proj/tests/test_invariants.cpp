#include <cmath>
#include <random>

#include "doctest.h"
#include "rigid1d/invariants.hpp"

using namespace rigid1d;

namespace {

const QuadVal kSqrt2 = QuadVal::sqrt_of(2);
const Mat2Z kF0(5, 2, 2, 1);

const TranslationData& default_td() {
  static const TranslationData td =
      make_translation_data(WitnessedMatrix::from_word(Word::parse("g1g2")), QuadVal(1), kSqrt2);
  return td;
}

const ActionModel& interval5() {
  static const ActionModel m = ActionModel::build(ModelConfig::interval_default(5));
  return m;
}

const ActionModel& circle5() {
  static const ActionModel m = ActionModel::build(ModelConfig::circle_default(5));
  return m;
}

/// f0^{-n}(1,0) . (1, sqrt 2) from closed-form values frozen from a symbolic computation.
const QuadVal kConjugates[] = {QuadVal(1),        QuadVal(1, -2, 2),     QuadVal(5, -12, 2),
                               QuadVal(29, -70, 2), QuadVal(169, -408, 2), QuadVal(985, -2378, 2)};

}  // namespace

TEST_CASE("translation numbers are linear in v") {
  const TranslationData& td = default_td();
  CHECK(translation_number(td, {1, 0}) == QuadVal(1));
  CHECK(translation_number(td, {2, 1}) == QuadVal(2, 1, 2));
  CHECK(translation_number(td, {0, 0}) == QuadVal(0));
}

TEST_CASE("property: translation numbers form a homomorphism") {
  std::mt19937_64 rng(13);
  const TranslationData& td = default_td();
  for (int i = 0; i < 100; ++i) {
    const auto draw = [&] { return static_cast<std::int64_t>(rng() % 101) - 50; };
    const IntVec2 v{draw(), draw()}, w{draw(), draw()};
    CHECK(translation_number(td, v + w) == translation_number(td, v) + translation_number(td, w));
  }
}

TEST_CASE("conjugate translation numbers") {
  const TranslationData& td = default_td();
  for (long n = 0; n <= 5; ++n) CHECK(conjugate_translation_number(td, n) == kConjugates[n]);
  CHECK(conjugate_translation_number(td, 1).to_double() == doctest::Approx(-1.828427).epsilon(1e-6));
  const QuadVal lambda(3, 2, 2);
  CHECK(conjugate_translation_number(td, 2) == lambda.pow(2) * *td.t + QuadVal(1) / lambda.pow(2) * *td.t_prime);
  const auto [x, y] = conjugate_vector(td, 2);
  CHECK(x == 5);
  CHECK(y == -12);
}

TEST_CASE("property: both conjugation routes agree exactly") {
  const TranslationData& td = default_td();
  for (long n = 0; n <= 30; ++n) CHECK(conjugate_translation_number(td, n) == conjugate_translation_number_eigen(td, n));
}

TEST_CASE("eigen components") {
  const TranslationData& td = default_td();
  const EigenComponents c = eigen_components(td);
  CHECK(c.t == QuadVal(0, Rational(-1, 4), 2));
  CHECK(c.t_prime == QuadVal(1, Rational(1, 4), 2));
  CHECK(eigen_components(td, {-1, 0}).t == QuadVal(0, Rational(1, 4), 2));
  CHECK(td.eigen.lambda_exp == QuadVal(3, 2, 2));
  // (r, s) orthogonal to the expanding eigenvector of f0^{-1}.
  const QuadVec v = td.eigen.v_exp;
  const TranslationData orth = make_translation_data(td.f0, -v[1], v[0]);
  CHECK_THROWS_AS(eigen_components(orth), ConditionViolation);
}

TEST_CASE("Eigenvector predicate and model disjointness") {
  const QuadVec rs = default_td().rs();
  CHECK(claim1_predicate(kF0, rs));
  CHECK_FALSE(claim1_predicate(Mat2Z(), rs));
  // b = 2c and d = a make (1, sqrt 2) an eigenvector of f^T: [[3,4],[2,3]].
  CHECK_FALSE(claim1_predicate(Mat2Z(3, 4, 2, 3), rs));
  const Claim1Result r = claim1_empirical(interval5(), WitnessedMatrix::from_word(Word::parse("g1g2")),
                                          interval5().identity_index());
  CHECK(r.disjoint);
  const Claim1Result self =
      claim1_empirical(interval5(), WitnessedMatrix::from_word(Word()), interval5().identity_index());
  CHECK_FALSE(self.disjoint);
}

TEST_CASE("property: eigenvector disjointness holds on both models at safe depth") {
  std::mt19937_64 rng(17);
  const QuadVec rs = default_td().rs();
  for (const ActionModel* m : {&interval5(), &circle5()}) {
    int tested = 0;
    while (tested < 60) {
      std::vector<Letter> letters;
      const int len = 1 + static_cast<int>(rng() % 5);
      while (static_cast<int>(letters.size()) < len) {
        const Letter l = static_cast<Letter>(rng() % 4);
        if (!letters.empty() && letters.back() == inverse(l)) continue;
        letters.push_back(l);
      }
      const auto f = WitnessedMatrix::from_word(Word(letters));
      if (!is_hyperbolic(f.matrix)) continue;
      ++tested;
      if (claim1_predicate(f.matrix, rs)) CHECK(claim1_empirical(*m, f, m->identity_index()).disjoint);
    }
  }
}

TEST_CASE("irreducible components") {
  const ActionModel& m = interval5();
  const Gap& id = m.identity_gap();
  const Component c = irreducible_component(m, 0.5 * (id.left + id.right));
  CHECK_FALSE(c.degenerate);
  CHECK(c.lo == id.left);
  CHECK(c.hi == id.right);
  SymPoint p;
  p.x = BigReal(0.5);
  const double cantor = m.encode(p);
  CHECK(irreducible_component(m, cantor).degenerate);
  const auto k = m.find_gap(invert(kF0));
  REQUIRE(k.has_value());
  const Gap& g = m.gaps()[*k];
  const Component cg = irreducible_component(m, g.left + 0.5 * (g.right - g.left));
  CHECK(cg.gap == k);
}

TEST_CASE("property: sign law on the identity gap") {
  const TranslationData& td = default_td();
  const ActionModel& m = interval5();
  const Gap& id = m.identity_gap();
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      if (a == 0 && b == 0) continue;
      const int sign = translation_number(td, {a, b}).sign();
      for (double s : {0.1, 0.5, 0.9}) {
        const double x = id.left + s * (id.right - id.left);
        const double fx = evaluate(m, z2_word(a, b), x);
        CHECK((sign > 0) == (fx > x));
      }
    }
}

TEST_CASE("rotation numbers on the circle model") {
  const ActionModel& m = circle5();
  CHECK(rotation_number(m, Word(), 1000).value == 0.0);
  const RotationEstimate h1 = rotation_number(m, Word::parse("h1"), 10000);
  CHECK(circle_distance_to_zero(h1.value) <= h1.error_bound);
  const RotationEstimate h2 = rotation_number(m, Word::parse("h2"), 10000);
  const RotationEstimate mix = rotation_number(m, Word::parse("h1^2h2"), 10000);
  CHECK(circle_distance_to_zero(mix.value) <= mix.error_bound);
  CHECK(circle_distance_to_zero(mix.value - 2 * h1.value - h2.value) <=
        mix.error_bound + 2 * h1.error_bound + h2.error_bound);
  CHECK_THROWS_AS(rotation_number(interval5(), Word::parse("h1"), 100), std::invalid_argument);
}

TEST_CASE("property: every Z^2 element has rotation number 0") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const RotationEstimate r = rotation_number(circle5(), z2_word(a, b), 2000);
      CHECK(circle_distance_to_zero(r.value) <= r.error_bound);
    }
}

TEST_CASE("torus fixed points") {
  CHECK(torus_fixed_point_check(kF0, QuadVal(0), QuadVal(0)));
  CHECK(torus_fixed_point_check(kF0, QuadVal(Rational(1, 2)), QuadVal(0)));
  CHECK_FALSE(torus_fixed_point_check(kF0, QuadVal(Rational(1, 3)), QuadVal(0)));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    Mat2Z m;
    for (int j = 0; j < 6; ++j) m = m * letter_matrix(static_cast<Letter>(rng() % 4));
    CHECK(torus_fixed_point_check(m, QuadVal(0), QuadVal(0)));
  }
}
