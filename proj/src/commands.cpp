#include "rigid1d/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "rigid1d/invariants.hpp"
#include "rigid1d/rigidity.hpp"
#include "rigid1d/serialize.hpp"
#include "rigid1d/svg.hpp"

namespace fs = std::filesystem;

namespace rigid1d {

namespace {

constexpr int kPlotMaxK = 10;
constexpr double kResidualTolerance = 1e-9;
constexpr double kRotationTolerance = 1e-4;
constexpr double kFlatGermTolerance = 0.05;

std::string stamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[64];
  std::strftime(buf, sizeof buf, "generated %Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + dir + "'");
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot write '" + path.string() + "'");
  return os;
}

/// Reduced word over g1, G1, g2, G2 drawn uniformly letter by letter.
Word random_matrix_word(std::mt19937_64& rng, int min_len, int max_len) {
  const int len = min_len + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len - min_len + 1));
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < len) {
    const Letter l = static_cast<Letter>(rng() % 4);
    if (!letters.empty() && letters.back() == inverse(l)) continue;
    letters.push_back(l);
  }
  return Word(std::move(letters));
}

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;
};

class Report {
 public:
  Report(std::ostream& out) : out_(out) {}

  void add(std::string name, bool pass, std::string detail) {
    out_ << (pass ? "[pass] " : "[FAIL] ") << name << ": " << detail << "\n";
    lines_.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    return std::all_of(lines_.begin(), lines_.end(), [](const CheckLine& c) { return c.pass; });
  }
  const std::vector<CheckLine>& lines() const { return lines_; }

 private:
  std::ostream& out_;
  std::vector<CheckLine> lines_;
};

ActionModel build_or_read_model(const RunConfig& config) {
  if (config.model_file.empty()) return ActionModel::build(config.model);
  std::ifstream is(config.model_file);
  if (!is) throw IoError("cannot read model file '" + config.model_file + "'");
  return read_model(is);
}

struct ResidualRow {
  std::string f;
  std::string v;
  ResidualReport report;
};

std::vector<ResidualRow> residual_table(const ActionModel& model, std::size_t samples, std::uint64_t seed) {
  std::vector<ResidualRow> rows;
  const std::vector<std::pair<std::string, IntVec2>> vs = {{"(1,0)", {1, 0}}, {"(0,1)", {0, 1}}, {"(2,-1)", {2, -1}}};
  for (const char* f : {"g1", "g2", "g1g2"})
    for (const auto& [vname, v] : vs)
      rows.push_back({f, vname, relation_residual(model, WitnessedMatrix::from_word(Word::parse(f)), v, samples, seed)});
  return rows;
}

/// Worst evaluated residual and total evaluated samples over a table.
std::pair<double, std::size_t> residual_summary(const std::vector<ResidualRow>& rows) {
  double worst = 0;
  std::size_t evaluated = 0;
  for (const auto& r : rows) {
    if (r.report.max_residual) worst = std::max(worst, *r.report.max_residual);
    evaluated += r.report.evaluated;
  }
  return {worst, evaluated};
}

ModelConfig circle_companion(const ModelConfig& m) {
  ModelConfig c = m;
  c.variant = Variant::circle;
  c.depth = std::min(m.depth, 6);
  return c;
}

struct VerifyState {
  std::optional<RigidityParams> params;
  std::vector<DisjointnessCertificate> certificates;
  std::optional<GrowthCertificate> growth;
  std::string counterexample;
};

void write_counterexample(VerifyState& st, const DisjointnessCertificate& c) {
  if (!st.counterexample.empty() || !c.counterexample) return;
  const auto [a, b] = *c.counterexample;
  const auto ia = std::find(c.eps.begin(), c.eps.end(), a) - c.eps.begin();
  const auto ib = std::find(c.eps.begin(), c.eps.end(), b) - c.eps.begin();
  const std::int64_t field = c.mu_j.field() != 0 ? c.mu_j.field() : c.tau[static_cast<std::size_t>(ib)].field();
  std::ostringstream os;
  os << "kind disjointness\n";
  os << "k " << c.k << "\n";
  os << "eps_a " << eps_bits(a, c.k) << " tau " << exact_triple(c.tau[static_cast<std::size_t>(ia)], field) << "\n";
  os << "eps_b " << eps_bits(b, c.k) << " tau " << exact_triple(c.tau[static_cast<std::size_t>(ib)], field) << "\n";
  os << "mu_J " << exact_triple(c.mu_j, field) << "\n";
  os << "difference_minus_mu "
     << exact_triple(c.tau[static_cast<std::size_t>(ib)] - c.tau[static_cast<std::size_t>(ia)] - c.mu_j, field) << "\n";
  st.counterexample = os.str();
}

void run_certification(const RunConfig& config, const ActionModel& model, VerifyState& st, Report& rep) {
  const QuadVec rs = config.rs();
  std::optional<WitnessedMatrix> f0;
  if (config.f0 == "search") {
    f0 = search_candidate(rs, config.search_max_len);
    if (!f0) {
      rep.add("f0", false, "no hyperbolic word of length <= " + std::to_string(config.search_max_len) +
                               " passes conditions (i)-(iii)");
      st.counterexample = "kind search\nno candidate f0\n";
      return;
    }
  } else {
    f0 = WitnessedMatrix::from_word(Word::parse(config.f0));
  }
  const Conditions cond = conditions_check(f0->matrix, rs);
  const bool hyperbolic = is_hyperbolic(f0->matrix);
  rep.add("conditions", hyperbolic && cond.all(),
          "f0 = " + f0->word.to_string() + " = " + f0->matrix.to_string() + ", hyperbolic " + (hyperbolic ? "yes" : "no") +
              ", (i) " + (cond.i ? "yes" : "no") + ", (ii) " + (cond.ii ? "yes" : "no") + ", (iii) " +
              (cond.iii ? "yes" : "no"));
  if (!hyperbolic || !cond.all()) {
    st.counterexample = "kind conditions\nf0 " + f0->word.to_string() + "\n";
    return;
  }

  const TranslationData td = make_translation_data(*f0, rs[0], rs[1]);
  try {
    st.params = tune_parameters(td, config.horizons);
  } catch (const TuningError& e) {
    rep.add("tuning", false, std::string(e.what()) + " (last failure: " + e.last_failure() + ")");
    st.counterexample = "kind tuning\n" + e.last_failure() + "\n";
    return;
  } catch (const ConditionViolation& e) {
    rep.add("tuning", false, e.what());
    st.counterexample = "kind tuning\n" + std::string(e.what()) + "\n";
    return;
  }
  if (config.mu_j) set_mu_j(*st.params, *config.mu_j);
  RigidityParams& p = *st.params;
  rep.add("tuning", true, p.summary());

  const auto eq2 = check_eq2(p, 1, config.horizons.i_max);
  const auto eq3 = check_eq3(p, 1, config.horizons.n_max);
  const auto failed = [](const std::vector<InequalityCheck>& v) {
    return std::count_if(v.begin(), v.end(), [](const InequalityCheck& c) { return !c.pass; });
  };
  rep.add("eq2", failed(eq2) == 0,
          std::to_string(eq2.size() - static_cast<std::size_t>(failed(eq2))) + "/" + std::to_string(eq2.size()) +
              " hold for 1 <= i <= " + std::to_string(config.horizons.i_max));
  const auto eq3_zero = check_eq3(p, 0, 0).front();
  rep.add("eq3", failed(eq3) == 0,
          std::to_string(eq3.size() - static_cast<std::size_t>(failed(eq3))) + "/" + std::to_string(eq3.size()) +
              " hold for 1 <= n <= " + std::to_string(config.horizons.n_max) + "; n = 0 gives |t'| = " +
              fmt_short(eq3_zero.lhs));

  bool certs_pass = true;
  for (int k = 0; k <= config.k_max; ++k) {
    DisjointnessCertificate c = certify_disjoint(p, k);
    certs_pass = certs_pass && c.pass && c.count() == (std::size_t{1} << k);
    if (!c.pass) write_counterexample(st, c);
    st.certificates.push_back(std::move(c));
  }
  const auto& last = st.certificates.back();
  rep.add("claim3", certs_pass,
          "2^k images pairwise disjoint for k <= " + std::to_string(config.k_max) + "; min gap at k = " +
              std::to_string(last.k) + " is " + (last.min_gap ? last.min_gap->to_string() : std::string("none")));

  const auto margins = separation_margins(p, config.k_max);
  std::size_t bad = 0;
  for (const auto& m : margins) bad += m.sign() > 0 ? 0 : 1;
  rep.add("separation", bad == 0,
          std::to_string(margins.size() - bad) + "/" + std::to_string(margins.size()) +
              " steps satisfy tau_i - sum_{j<i} tau_j > mu(J)");

  const int cross_k = std::min(config.cross_k, config.k_max);
  const CrossValidationReport cv = cross_validate_geometric(model, p, cross_k);
  rep.add("cross_validation", cv.agree(),
          std::to_string(cv.words) + " words at k = " + std::to_string(cross_k) + ", " +
              std::to_string(cv.ordering_mismatches) + " ordering and " + std::to_string(cv.value_mismatches) +
              " value mismatches, " + std::to_string(cv.depth_flags) + " beyond materialized depth, max error " +
              fmt_short(cv.max_value_error));
}

void run_suites(const RunConfig& config, const ActionModel& model, const ActionModel& circle, VerifyState& st,
                Report& rep) {
  const QuadVec rs = config.rs();

  {
    std::mt19937_64 rng(config.seed);
    const int max_len = std::clamp(model.depth(), 1, 6);
    int tested = 0, predicted = 0, violations = 0, attempts = 0;
    std::string first_violation;
    while (tested < config.claim1_words && attempts < 1000 * std::max(config.claim1_words, 1)) {
      ++attempts;
      const Word w = random_matrix_word(rng, 1, max_len);
      const WitnessedMatrix f = WitnessedMatrix::from_word(w);
      if (!is_hyperbolic(f.matrix)) continue;
      ++tested;
      if (!claim1_predicate(f.matrix, rs)) continue;
      ++predicted;
      const Claim1Result r = claim1_empirical(model, f, model.identity_index());
      if (!r.disjoint) {
        ++violations;
        if (first_violation.empty()) first_violation = w.to_string();
      }
    }
    rep.add("claim1", violations == 0 && tested == config.claim1_words,
            std::to_string(tested) + " hyperbolic words, " + std::to_string(predicted) + " predicted disjoint, " +
                std::to_string(violations) + " violations" +
                (first_violation.empty() ? std::string() : " (first " + first_violation + ")"));
    if (violations > 0 && st.counterexample.empty()) st.counterexample = "kind claim1\nword " + first_violation + "\n";
  }

  {
    std::mt19937_64 rng(config.seed + 1);
    int failures = 0;
    for (int i = 0; i < config.torus_words; ++i) {
      const Word w = random_matrix_word(rng, 1, 8);
      if (!torus_fixed_point_check(word_to_matrix(w), QuadVal(0), QuadVal(0))) ++failures;
    }
    double worst = 0;
    for (const char* g : {"h1", "h2", "h1^2h2"}) {
      const RotationEstimate r = rotation_number(circle, Word::parse(g), config.rotation_iterations);
      worst = std::max(worst, circle_distance_to_zero(r.value));
    }
    rep.add("torus", failures == 0 && worst <= kRotationTolerance,
            std::to_string(config.torus_words - failures) + "/" + std::to_string(config.torus_words) +
                " words fix (0,0); rotation numbers of h1, h2, h1^2h2 within " + fmt_short(worst) + " of 0");
  }

  for (const ActionModel* m : {&model, &circle}) {
    const auto rows = residual_table(*m, config.residual_samples, config.seed);
    const auto [worst, evaluated] = residual_summary(rows);
    rep.add("relations_" + to_string(m->variant()), worst <= kResidualTolerance,
            "max residual " + fmt_short(worst) + " over " + std::to_string(evaluated) + " evaluations");
  }

  {
    const GrowthCertificate g = growth_contradiction(config.growth_a, config.growth_n, config.growth_j, config.growth_ab);
    rep.add("growth", true,
            "k* = " + std::to_string(g.k_star) + " with bound " + fmt_short(g.bound_at_k_star.get_d()) + " > " +
                config.growth_ab.get_str());
    st.growth = g;
  }

  {
    const FlatGermReport fg = flat_germ_probe([](const BigReal& d) { return d * BigReal(2.0); }, config.reversed);
    std::ostringstream q;
    for (std::size_t i = 0; i < fg.quotients.size(); ++i) q << (i ? " " : "") << fmt_short(fg.quotients[i]);
    rep.add("flat_germ", fg.monotone_toward_one && fg.final_deviation <= kFlatGermTolerance,
            std::string(config.reversed ? "left" : "right") + " quotients " + q.str());
  }
}

void write_bundle(const fs::path& dir, const RunConfig& config, const VerifyState& st, const Report& rep) {
  std::ofstream os = open_out(dir / "bundle.txt");
  os << "# rigid1d verification bundle\n";
  if (st.params) {
    const RigidityParams& p = *st.params;
    os << "params_hash " << params_hash(p) << "\n";
    os << "f0 " << p.td.f0.word.to_string() << " " << p.td.f0.matrix.to_string() << "\n";
    os << "k_h " << p.k_h << "\n";
    os << "k_f " << p.k_f << "\n";
    os << "h_sign " << p.h_sign << "\n";
    os << "approximate " << (p.approximate ? "true" : "false") << "\n";
    os << "mu_J " << exact_triple(p.mu_j, p.td.eigen.field) << "\n";
  }
  for (const auto& c : st.certificates)
    os << "certificate " << c.k << " " << (c.pass ? "PASS" : "FAIL") << " " << c.count() << " "
       << (c.min_gap ? fmt(c.min_gap->to_double()) : std::string("none")) << " certificate_k" << c.k << ".txt\n";
  if (st.growth)
    os << "growth " << config.growth_a.get_str() << " " << config.growth_n << " " << config.growth_j.get_str() << " "
       << config.growth_ab.get_str() << " " << st.growth->k_star << "\n";
  for (const auto& l : rep.lines()) os << "check " << l.name << " " << (l.pass ? "PASS" : "FAIL") << " " << l.detail << "\n";
  os << "verdict " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
}

void write_intervals_csv(const fs::path& dir, const VerifyState& st) {
  std::ofstream os = open_out(dir / "intervals.csv");
  os << "# " << stamp() << "\n" << kIntervalsCsvColumns << "\n";
  for (const auto& c : st.certificates) {
    const double mu = c.mu_j.to_double();
    for (std::size_t i = 0; i < c.count(); ++i) {
      const double t = c.tau[i].to_double();
      os << c.k << "," << i << "," << eps_bits(c.eps[i], c.k) << "," << fmt(t) << "," << fmt(t + mu) << "\n";
    }
  }
}

}  // namespace

int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const ActionModel model = ActionModel::build(config.model);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ensure_dir(config.output);
    const fs::path path = fs::path(config.output) / "model.txt";
    {
      std::ofstream os = open_out(path);
      write_model(os, model);
    }
    out << "model " << to_string(model.variant()) << ", depth " << model.depth() << ", base point "
        << config.model.base_point.to_string() << ", built in " << fmt_short(secs) << " s\n";
    out << "gaps: " << model.gaps().size() << "\n";
    out << "materialized length: " << model.materialized_length().get_str() << " ("
        << fmt_short(model.materialized_length().get_d()) << ")\n";
    out << "truncation residual: " << model.truncation_residual().get_str() << " ("
        << fmt_short(model.truncation_residual().get_d()) << ")\n";
    out << "wrote " << path.string() << "\n";
    const auto rows = residual_table(model, config.residual_samples, config.seed);
    const bool any = std::any_of(rows.begin(), rows.end(), [](const ResidualRow& r) { return r.report.evaluated > 0; });
    if (!any) {
      out << "relation residuals: empty (no sample is shallow enough for depth " << model.depth() << ")\n";
      return kExitOk;
    }
    out << "relation residuals |f h_v f^-1 (x) - h_{fv}(x)|:\n";
    out << "  f      v       evaluated  flagged  max_residual\n";
    for (const auto& r : rows) {
      if (r.report.evaluated == 0) continue;
      char line[160];
      std::snprintf(line, sizeof line, "  %-6s %-7s %9zu  %7zu  %.3g\n", r.f.c_str(), r.v.c_str(), r.report.evaluated,
                    r.report.flagged, r.report.max_residual.value_or(0.0));
      out << line;
    }
    return kExitOk;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return kExitConstruction;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "invalid model parameters: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const ActionModel model = build_or_read_model(config);
    const ActionModel circle = model.variant() == Variant::circle
                                   ? model
                                   : ActionModel::build(circle_companion(model.config()));
    const fs::path dir(config.output);
    ensure_dir(config.output);

    Report rep(out);
    VerifyState st;
    run_certification(config, model, st, rep);
    run_suites(config, model, circle, st, rep);

    for (const auto& c : st.certificates) {
      std::ofstream os = open_out(dir / ("certificate_k" + std::to_string(c.k) + ".txt"));
      write_certificate(os, c, *st.params);
    }
    write_bundle(dir, config, st, rep);
    write_intervals_csv(dir, st);
    {
      std::ofstream os = open_out(dir / "config.txt");
      os << config_to_text(config);
    }
    const fs::path cx = dir / "counterexample.txt";
    if (!rep.all_pass()) {
      std::ofstream os = open_out(cx);
      os << (st.counterexample.empty() ? std::string("kind check\n") : st.counterexample);
      for (const auto& l : rep.lines())
        if (!l.pass) os << "failed " << l.name << "\n";
    } else {
      std::error_code ec;
      fs::remove(cx, ec);
    }
    out << "verdict: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
    return rep.all_pass() ? kExitOk : kExitCounterexample;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return kExitConstruction;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_plot(const std::string& bundle_dir, const std::string& output_dir, std::ostream& out, std::ostream& err) {
  try {
    const fs::path in(bundle_dir);
    std::ifstream is(in / "bundle.txt");
    if (!is) throw IoError("cannot read bundle '" + (in / "bundle.txt").string() + "'");
    struct Entry {
      int k;
      std::string min_gap;
      std::size_t count;
      std::string file;
    };
    std::vector<Entry> entries;
    std::optional<GrowthPlot> growth;
    std::optional<QuadVal> mu;
    std::string line;
    while (std::getline(is, line)) {
      std::istringstream ls(line);
      std::string key;
      ls >> key;
      if (key == "certificate") {
        Entry e{};
        std::string verdict;
        if (!(ls >> e.k >> verdict >> e.count >> e.min_gap >> e.file)) throw IoError("malformed bundle line: " + line);
        entries.push_back(e);
      } else if (key == "growth") {
        std::string a, j, ab;
        GrowthPlot g;
        if (!(ls >> a >> g.n >> j >> ab >> g.k_star)) throw IoError("malformed bundle line: " + line);
        g.a = parse_rational(a);
        g.j_length = parse_rational(j);
        g.ambient = parse_rational(ab);
        growth = g;
      } else if (key == "mu_J") {
        std::string rest;
        std::getline(ls, rest);
        mu = QuadVal::parse(rest);
      }
    }
    ensure_dir(output_dir);
    const fs::path dir(output_dir);
    const std::string st = stamp();

    {
      std::ofstream os = open_out(dir / "summary.csv");
      os << "# " << st << "\n" << kSummaryCsvColumns << "\n";
      for (const Entry& e : entries) {
        // Lower bound on the total length covered by the disjoint images: 2^k mu(J).
        const double total = mu ? std::ldexp(mu->to_double(), e.k) : 0.0;
        os << e.k << "," << e.min_gap << "," << fmt(total) << "," << e.count << "\n";
      }
    }

    std::optional<PackingPlot> packing;
    const Entry* chosen = nullptr;
    int k_largest = -1;
    for (const Entry& e : entries) {
      k_largest = std::max(k_largest, e.k);
      if (e.k <= kPlotMaxK && (!chosen || e.k > chosen->k)) chosen = &e;
    }
    if (chosen) {
      std::ifstream cs(in / chosen->file);
      if (!cs) throw IoError("cannot read certificate '" + (in / chosen->file).string() + "'");
      const ParsedCertificate pc = read_certificate(cs);
      PackingPlot p;
      p.k = pc.k;
      p.mu = pc.mu_j.to_double();
      for (const auto& [eps, tau] : pc.entries) p.tau.push_back(tau.to_double());
      if (k_largest > kPlotMaxK)
        p.notice = "bundle certifies k up to " + std::to_string(k_largest) + "; plot truncated to k = " +
                   std::to_string(pc.k);
      if (!p.notice.empty()) out << "notice: " << p.notice << "\n";
      packing = std::move(p);
    }
    {
      std::ofstream os = open_out(dir / "packing.svg");
      write_packing_svg(os, st, packing);
    }
    {
      std::ofstream os = open_out(dir / "growth.svg");
      write_growth_svg(os, st, growth);
    }
    out << "wrote " << (dir / "packing.svg").string() << ", " << (dir / "summary.csv").string() << ", "
        << (dir / "growth.svg").string() << "\n";
    return kExitOk;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "malformed bundle: " << e.what() << "\n";
    return kExitIo;
  }
}

int cmd_search_element(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.model.variant != Variant::interval && config.model_file.empty()) {
    err << "search-element needs the interval model (variant = interval)\n";
    return kExitUsage;
  }
  try {
    const ActionModel model = build_or_read_model(config);
    if (model.variant() != Variant::interval) {
      err << "search-element needs the interval model, " << config.model_file << " is a circle model\n";
      return kExitUsage;
    }
    const auto found = interior_fixed_element_search(model, config.rs(), config.search_max_len);
    if (!found) {
      out << "no element of length <= " << config.search_max_len << " passing (i)-(iii) has an interior fixed point\n";
      return kExitCounterexample;
    }
    out << "element " << found->element.word.to_string() << " = " << found->element.matrix.to_string()
        << " fixes x = " << fmt_short(found->location) << " inside ]0,1[\n";
    return kExitOk;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << "\n";
    return kExitConstruction;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rigid1d
