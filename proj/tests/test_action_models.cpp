#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "rigid1d/action_model.hpp"

using namespace rigid1d;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kT1 = 1.0;
const double kT2 = std::sqrt(2.0);

const ActionModel& interval5() {
  static const ActionModel m = ActionModel::build(ModelConfig::interval_default(5));
  return m;
}

const ActionModel& circle5() {
  static const ActionModel m = ActionModel::build(ModelConfig::circle_default(5));
  return m;
}

/// Expected position after flowing a point of gap g by time t, from the chart alone.
double flowed(const Gap& g, double x, double t) {
  const double len = g.right - g.left;
  const double s = (x - g.left) / len;
  const double y = std::tan(M_PI * (s - 0.5)) + t;
  return g.left + len * (std::atan(y) / M_PI + 0.5);
}

Rational schedule_sum_by_counting(const Rational& scale, const Rational& ratio, int depth) {
  Rational total = scale;
  Rational len = scale;
  long words = 4;
  for (int k = 1; k <= depth; ++k) {
    len *= ratio;
    total += Rational(words) * len;
    words *= 3;
  }
  return total;
}

}  // namespace

TEST_CASE("gap schedule totals") {
  const GapSchedule quarter{Rational(1, 4), Rational(1, 4)};
  CHECK(quarter.materialized_total(3) == Rational(53, 64));
  CHECK(quarter.materialized_total(3) == schedule_sum_by_counting(Rational(1, 4), Rational(1, 4), 3));
  const GapSchedule def;
  CHECK(def.infinite_total() == Rational(1, 2));
  for (int L = 0; L <= 8; ++L) CHECK(def.materialized_total(L) == schedule_sum_by_counting(def.scale, def.ratio, L));
  CHECK(GapSchedule::words_of_length(0) == 1);
  CHECK(GapSchedule::words_of_length(3) == 36);
  CHECK_FALSE(GapSchedule{Rational(1, 10), Rational(1, 3)}.summable());
}

TEST_CASE("depth-0 models have a single gap carrying the flow") {
  for (Variant v : {Variant::circle, Variant::interval}) {
    ModelConfig c = v == Variant::circle ? ModelConfig::circle_default(0) : ModelConfig::interval_default(0);
    const ActionModel m = ActionModel::build(c);
    REQUIRE(m.gaps().size() == 1);
    const Gap& id = m.identity_gap();
    CHECK(id.word.empty());
    const double x = id.left + 0.3 * (id.right - id.left);
    CHECK(evaluate(m, Word::parse("h1"), x) == doctest::Approx(flowed(id, x, kT1)).epsilon(1e-12));
    CHECK(evaluate(m, Word::parse("h2"), x) == doctest::Approx(flowed(id, x, kT2)).epsilon(1e-12));
    CHECK(evaluate(m, Word::parse("g1"), 0.5 * (id.left + id.right)) != doctest::Approx(0.5 * (id.left + id.right)));
  }
  const ActionModel m = ActionModel::build(ModelConfig::interval_default(0));
  const FixedPointReport fp = find_fixed_points(m, Word::parse("h1"), 512);
  const Gap& id = m.identity_gap();
  for (const auto& f : fp.fixed) CHECK((f.hi <= id.left + 1e-9 || f.lo >= id.right - 1e-9));
}

TEST_CASE("quarter schedule at depth 3 builds a valid table") {
  ModelConfig c = ModelConfig::circle_default(3);
  c.schedule = GapSchedule{Rational(1, 4), Rational(1, 4)};
  const ActionModel m = ActionModel::build(c);
  CHECK(m.gaps().size() == 53);
  CHECK(m.materialized_length() == Rational(53, 64));
  for (std::size_t i = 0; i + 1 < m.gaps().size(); ++i) CHECK(m.gaps()[i].right <= m.gaps()[i + 1].left);
}

TEST_CASE("stabilizer collisions are rejected") {
  // Slope 0 is the fixed direction of g1 on the circle.
  CHECK_THROWS_AS(build_circle_model(3, GapSchedule{}, BasePoint::exact(QuadVal(0))), ConstructionError);
  // 0 and 2 on the line have materialized stabilizer collisions under x+1, x^3.
  CHECK_THROWS_AS(build_interval_model(3, GapSchedule{}, BasePoint::exact(QuadVal(0))), ConstructionError);
  CHECK_THROWS_AS(build_interval_model(3, GapSchedule{}, BasePoint::exact(QuadVal(2))), ConstructionError);
  // sqrt(2)/2 satisfies G1^6 g2 g1 (p) = G1 g2 G1 (p) exactly at depth 8.
  CHECK_THROWS_AS(build_interval_model(8, GapSchedule{}, BasePoint::exact(QuadVal(0, Rational(1, 2), 2))),
                  ConstructionError);
  CHECK_THROWS_AS(ActionModel::build([] {
                    ModelConfig c = ModelConfig::interval_default(3);
                    c.schedule.scale = 1;
                    return c;
                  }()),
                  std::invalid_argument);
}

TEST_CASE("interval base letters act as x+1 and x^3") {
  const ActionModel& m = interval5();
  SymPoint p;
  p.x = BigReal(0.0);
  const double x0 = m.encode(p);
  p.x = BigReal(1.0);
  const double x1 = m.encode(p);
  p.x = BigReal(8.0);
  const double x8 = m.encode(p);
  CHECK(evaluate(m, Word::parse("g1"), x0) == doctest::Approx(x1).epsilon(1e-12));
  p.x = BigReal(2.0);
  CHECK(evaluate(m, Word::parse("g2"), m.encode(p)) == doctest::Approx(x8).epsilon(1e-12));
}

TEST_CASE("evaluation of the defining cases") {
  const ActionModel& m = interval5();
  const Gap& id = m.identity_gap();
  const double x = id.left + 0.7 * (id.right - id.left);
  CHECK(evaluate(m, Word(), x) == x);
  CHECK(evaluate(m, Word::parse("h1"), x) == doctest::Approx(flowed(id, x, kT1)).epsilon(1e-12));
  // Gap of f^{-1} for f = g1g2: h1 flows by <f (1,0), (t1,t2)> = 5 t1 + 2 t2.
  const auto k = m.find_gap(invert(Mat2Z(5, 2, 2, 1)));
  REQUIRE(k.has_value());
  const Gap& g = m.gaps()[*k];
  CHECK(g.word == Word::parse("G2G1"));
  const double y = g.left + 0.4 * (g.right - g.left);
  const double direct = evaluate(m, Word::parse("h1"), y);
  CHECK(direct == doctest::Approx(flowed(g, y, 5 * kT1 + 2 * kT2)).epsilon(1e-12));
  CHECK(evaluate(m, Word::parse("G2G1 h1^5 h2^2 g1g2"), y) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("relation residuals") {
  for (const ActionModel* m : {&interval5(), &circle5()}) {
    const auto f = WitnessedMatrix::from_word(Word::parse("g1g2"));
    const ResidualReport zero = relation_residual(*m, f, IntVec2{0, 0}, 300, 1);
    REQUIRE(zero.max_residual.has_value());
    CHECK(*zero.max_residual == 0.0);
    const Gap& id = m->identity_gap();
    std::vector<double> in_id;
    for (int i = 1; i < 50; ++i) in_id.push_back(id.left + (id.right - id.left) * i / 50.0);
    const ResidualReport r = relation_residual(*m, f, IntVec2{1, 0}, in_id);
    REQUIRE(r.max_residual.has_value());
    CHECK(*r.max_residual <= 1e-9);
  }
  const ActionModel shallow = ActionModel::build(ModelConfig::interval_default(1));
  const ResidualReport flagged =
      relation_residual(shallow, WitnessedMatrix::from_word(Word::parse("g1g2")), IntVec2{1, 0}, 200, 0);
  CHECK_FALSE(flagged.max_residual.has_value());
  CHECK(flagged.flagged == 200);
}

TEST_CASE("fixed points") {
  const FixedPointReport id = find_fixed_points(interval5(), Word(), 256);
  CHECK(id.whole_space);
  const FixedPointReport h1 = find_fixed_points(interval5(), Word::parse("h1"), 1024);
  CHECK_FALSE(h1.whole_space);
  const Gap& g = interval5().identity_gap();
  for (const auto& f : h1.fixed) CHECK((f.hi <= g.left + 1e-9 || f.lo >= g.right - 1e-9));
  const FixedPointReport hyp = find_fixed_points(circle5(), Word::parse("g1g2"), 1024);
  CHECK(hyp.fixed.size() >= 2);
}

TEST_CASE("property: generators preserve orientation") {
  std::mt19937_64 rng(21);
  for (const ActionModel* m : {&interval5(), &circle5()}) {
    const auto xs = safe_samples(*m, 2, 200, 3);
    for (const char* g : {"g1", "G1", "g2", "G2", "h1", "H1", "h2", "H2"}) {
      const Word w = Word::parse(g);
      for (int i = 0; i < 200; ++i) {
        double a = xs[rng() % xs.size()], b = xs[rng() % xs.size()];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const double fa = evaluate_lift(*m, w, a), fb = evaluate_lift(*m, w, b);
        CHECK(fa < fb);
      }
    }
  }
}

TEST_CASE("property: inverse letters undo each other") {
  for (const ActionModel* m : {&interval5(), &circle5()}) {
    const auto xs = safe_samples(*m, 3, 300, 4);
    for (const char* g : {"g1", "g2", "h1", "h2", "g1g2", "h1g2H2"}) {
      const Word w = Word::parse(g);
      for (double x : xs) CHECK(model_distance(*m, evaluate(*m, w.inverse(), evaluate(*m, w, x)), x) <= 1e-9);
    }
  }
}

TEST_CASE("property: flow additivity on the identity gap") {
  for (const ActionModel* m : {&interval5(), &circle5()}) {
    const Gap& id = m->identity_gap();
    const double x = id.left + 0.45 * (id.right - id.left);
    for (int a = -20; a <= 20; a += 4)
      for (int b = -20; b <= 20; b += 5)
        CHECK(evaluate(*m, z2_word(a, b), x) == doctest::Approx(flowed(id, x, a * kT1 + b * kT2)).epsilon(1e-11));
  }
}

TEST_CASE("property: matrix letters carry gaps onto gaps") {
  for (const ActionModel* m : {&interval5(), &circle5()}) {
    for (const Gap& g : m->gaps()) {
      if (g.depth >= m->depth()) continue;
      for (Letter l : {Letter::g1, Letter::G1, Letter::g2, Letter::G2}) {
        const auto k = m->find_gap(letter_matrix(l) * g.label);
        REQUIRE(k.has_value());
        const Gap& target = m->gaps()[*k];
        const Word w({l});
        CHECK(m->encode(m->apply(w, m->gap_point(g.label, -kInf))) == doctest::Approx(target.left).epsilon(1e-12));
        CHECK(m->encode(m->apply(w, m->gap_point(g.label, kInf))) == doctest::Approx(target.right).epsilon(1e-12));
        const double mid = m->encode(m->apply(w, m->gap_point(g.label, 0.3)));
        CHECK(mid > target.left);
        CHECK(mid < target.right);
      }
    }
  }
}

TEST_CASE("property: nontrivial normal forms move some sample") {
  // Every element of the semidirect product is M h1^a h2^b for a reduced matrix word M.
  const std::vector<std::pair<int, int>> z2 = {{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {2, -1}, {0, -2}};
  for (const ActionModel* m : {&interval5(), &circle5()}) {
    std::vector<double> xs = safe_samples(*m, 2, 150, 8);
    const Gap& id = m->identity_gap();
    for (int i = 1; i < 10; ++i) xs.push_back(id.left + (id.right - id.left) * i / 10.0);
    std::vector<Word> matrix_words = {Word()};
    for_each_reduced_word(4, [&](const Word& w) {
      matrix_words.push_back(w);
      return true;
    });
    for (const Word& mw : matrix_words)
      for (const auto& [a, b] : z2) {
        const Word w = mw * z2_word(a, b);
        if (w.empty()) continue;
        double moved = 0;
        for (double x : xs) moved = std::max(moved, model_distance(*m, evaluate(*m, w, x), x));
        CHECK_MESSAGE(moved > 1e-6, w.to_string());
      }
  }
}
