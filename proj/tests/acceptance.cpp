// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "rigid1d/commands.hpp"
#include "rigid1d/rigidity.hpp"

using namespace rigid1d;
namespace fs = std::filesystem;

namespace {

int failures = 0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion(int number, const std::string& title, const std::function<std::string(bool&)>& body) {
  bool ok = true;
  std::string detail;
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", number, title.c_str(), detail.c_str());
  std::fflush(stdout);
}

TranslationData default_td() {
  return make_translation_data(WitnessedMatrix::from_word(Word::parse("g1g2")), QuadVal(1), QuadVal::sqrt_of(2));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Smallest k >= N with k ln 2 + 3N ln A + (k - N) ln(3/4) + ln |J| > ln |[a,b]|.
int kstar_by_logs(double a, int n, double j, double ab) {
  int k = n;
  while (!(k * std::log(2.0) + 3 * n * std::log(a) + (k - n) * std::log(0.75) + std::log(j) > std::log(ab))) ++k;
  return k;
}

}  // namespace

int main() {
  const QuadVal sqrt2 = QuadVal::sqrt_of(2);

  criterion(1, "default tuning and inequalities", [&](bool& ok) {
    const auto start = std::chrono::steady_clock::now();
    const RigidityParams p = tune_parameters(default_td());
    bool eq = true;
    for (const auto& c : check_eq2(p, 1, 40)) eq = eq && c.pass;
    for (const auto& c : check_eq3(p, 1, 40)) eq = eq && c.pass;
    const double s = seconds_since(start);
    ok = p.k_h == 1 && p.h_sign == -1 && p.k_f == 1 && !p.approximate && *p.t == sqrt2 / QuadVal(4) &&
         *p.lambda == QuadVal(3, 2, 2) && eq && s < 1.0;
    return p.summary() + ", inequalities " + (eq ? "hold" : "fail") + ", " + fmt(s) + " s";
  });

  criterion(2, "separating-word certificates for k <= 14", [&](bool& ok) {
    const auto start = std::chrono::steady_clock::now();
    const RigidityParams p = tune_parameters(default_td());
    std::size_t words = 0;
    for (int k = 0; k <= 14; ++k) {
      const auto c = certify_disjoint(p, k);
      ok = ok && c.pass && c.count() == (std::size_t{1} << k);
      words += c.count();
    }
    for (const auto& m : separation_margins(p, 14)) ok = ok && m.sign() > 0;
    const double s = seconds_since(start);
    ok = ok && s < 30.0;
    return std::to_string(words) + " words over k = 0..14, margins positive, " + fmt(s) + " s";
  });

  criterion(3, "geometric cross-validation", [&](bool& ok) {
    const RigidityParams p = tune_parameters(default_td());
    const ActionModel m = ActionModel::build(ModelConfig::interval_default(8));
    std::size_t mismatches = 0, words = 0;
    for (int k = 0; k <= 6; ++k) {
      const auto r = cross_validate_geometric(m, p, k);
      mismatches += r.ordering_mismatches;
      words = r.words;
    }
    ok = mismatches == 0 && words == 64;
    return std::to_string(mismatches) + " ordering mismatches, depth 8";
  });

  criterion(4, "semidirect relations", [&](bool& ok) {
    double worst = 0;
    std::size_t least = SIZE_MAX;
    for (const ActionModel& m :
         {ActionModel::build(ModelConfig::interval_default(8)), ActionModel::build(ModelConfig::circle_default(8))}) {
      for (const char* f : {"g1", "g2", "g1g2"}) {
        const auto wf = WitnessedMatrix::from_word(Word::parse(f));
        const auto samples = safe_samples(m, m.depth() - static_cast<int>(wf.word.size()), 1000, 0);
        for (const IntVec2& v : {IntVec2{1, 0}, IntVec2{0, 1}, IntVec2{2, -1}}) {
          const ResidualReport r = relation_residual(m, wf, v, samples);
          if (!r.max_residual) {
            ok = false;
            continue;
          }
          worst = std::max(worst, *r.max_residual);
          least = std::min(least, r.evaluated);
        }
      }
    }
    ok = ok && worst <= 1e-9 && least >= 1000;
    return "max residual " + fmt(worst) + ", at least " + std::to_string(least) + " samples per pair";
  });

  criterion(5, "eigenvector-disjointness suite", [&](bool& ok) {
    const QuadVec rs = {QuadVal(1), sqrt2};
    const ActionModel m = ActionModel::build(ModelConfig::interval_default(8));
    std::mt19937_64 rng(0);
    int tested = 0, predicted = 0, violations = 0;
    while (tested < 100) {
      std::vector<Letter> letters;
      const int len = 1 + static_cast<int>(rng() % 6);
      while (static_cast<int>(letters.size()) < len) {
        const Letter l = static_cast<Letter>(rng() % 4);
        if (!letters.empty() && letters.back() == inverse(l)) continue;
        letters.push_back(l);
      }
      const auto f = WitnessedMatrix::from_word(Word(letters));
      if (!is_hyperbolic(f.matrix)) continue;
      ++tested;
      if (!claim1_predicate(f.matrix, rs)) continue;
      ++predicted;
      if (!claim1_empirical(m, f, m.identity_index()).disjoint) ++violations;
    }
    ok = violations == 0;
    return std::to_string(tested) + " words, " + std::to_string(predicted) + " predicted disjoint, " +
           std::to_string(violations) + " violations";
  });

  criterion(6, "eigen identity", [&](bool& ok) {
    const TranslationData td = default_td();
    int agree = 0;
    for (long n = 0; n <= 30; ++n)
      if (conjugate_translation_number(td, n) == conjugate_translation_number_eigen(td, n)) ++agree;
    ok = agree == 31;
    return std::to_string(agree) + "/31 exact agreements";
  });

  criterion(7, "growth contradiction", [&](bool& ok) {
    const auto g = growth_contradiction(Rational(1, 2), 4, Rational(1, 100), Rational(1));
    const int oracle = kstar_by_logs(0.5, 4, 0.01, 1);
    const Rational js[] = {Rational(1, 1000), Rational(1, 200), Rational(1, 100), Rational(1, 20), Rational(1, 4)};
    const Rational abs[] = {Rational(1, 2), Rational(1), Rational(2), Rational(5), Rational(10)};
    bool monotone = true;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const int k = growth_contradiction(Rational(1, 2), 4, js[i], abs[j]).k_star;
        if (i + 1 < 5 && growth_contradiction(Rational(1, 2), 4, js[i + 1], abs[j]).k_star > k) monotone = false;
        if (j + 1 < 5 && growth_contradiction(Rational(1, 2), 4, js[i], abs[j + 1]).k_star < k) monotone = false;
      }
    ok = g.k_star == 30 && oracle == 30 && monotone;
    return "k* = " + std::to_string(g.k_star) + ", log oracle " + std::to_string(oracle) + ", grid " +
           (monotone ? "monotone" : "not monotone");
  });

  criterion(8, "rotation numbers and torus fixed points", [&](bool& ok) {
    const ActionModel c = ActionModel::build(ModelConfig::circle_default(6));
    double worst = 0;
    for (const char* g : {"h1", "h2", "h1^2h2"})
      worst = std::max(worst, circle_distance_to_zero(rotation_number(c, Word::parse(g), 10000).value));
    std::mt19937_64 rng(1);
    int fixed = 0;
    for (int i = 0; i < 20; ++i) {
      Mat2Z m;
      for (int j = 0, len = 1 + static_cast<int>(rng() % 8); j < len; ++j)
        m = m * letter_matrix(static_cast<Letter>(rng() % 4));
      if (torus_fixed_point_check(m, QuadVal(0), QuadVal(0))) ++fixed;
    }
    ok = worst <= 1e-4 && fixed == 20;
    return "max distance to 0 " + fmt(worst) + ", " + std::to_string(fixed) + "/20 words fix (0,0)";
  });

  criterion(9, "flat germ probe", [&](bool& ok) {
    const auto r = flat_germ_probe([](const BigReal& d) { return d * BigReal(2.0); });
    ok = r.monotone_toward_one && r.final_deviation <= 0.05;
    return "deviation at 1e-5 " + fmt(r.final_deviation) +
           (r.monotone_toward_one ? ", monotone" : ", not monotone");
  });

  criterion(10, "deterministic verify", [&](bool& ok) {
    const fs::path a = fs::current_path() / "acceptance_run_a", b = fs::current_path() / "acceptance_run_b";
    fs::remove_all(a);
    fs::remove_all(b);
    std::ostringstream out, err;
    const int ca = cmd_verify(make_config({{"acceptance", "output", a.string()}}), out, err);
    const int cb = cmd_verify(make_config({{"acceptance", "output", b.string()}}), out, err);
    int files = 0, identical = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
      const std::string name = entry.path().filename().string();
      if (name.rfind("certificate_k", 0) != 0) continue;
      ++files;
      if (slurp(entry.path()) == slurp(b / name)) ++identical;
    }
    ok = ca == kExitOk && cb == kExitOk && files == 15 && identical == files;
    return std::to_string(identical) + "/" + std::to_string(files) + " certificate files identical, exit codes " +
           std::to_string(ca) + " " + std::to_string(cb);
  });

  return failures == 0 ? 0 : 1;
}
