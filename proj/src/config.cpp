#include "rigid1d/config.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <sstream>

namespace rigid1d {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

long parse_long(const std::string& v) {
  long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw std::invalid_argument("expected an integer, got '" + v + "'");
  return out;
}

int parse_int_in(const std::string& v, long lo, long hi) {
  const long x = parse_long(v);
  if (x < lo || x > hi)
    throw std::invalid_argument("must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + v);
  return static_cast<int>(x);
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("expected true or false, got '" + v + "'");
}

Rational parse_positive_rational(const std::string& v) {
  const Rational r = parse_rational(v);
  if (r <= 0) throw std::invalid_argument("must be positive, got " + v);
  return r;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

struct KeySpec {
  ConfigKey doc;
  Setter set;
};

const std::vector<KeySpec>& key_specs() {
  static const std::vector<KeySpec> specs = {
      {{"variant", "circle | interval (default interval)"},
       [](RunConfig& c, const std::string& v) { c.model.variant = parse_variant(v); }},
      {{"depth", "materialized word length L, 0..10 (default 8)"},
       [](RunConfig& c, const std::string& v) { c.model.depth = parse_int_in(v, 0, 10); }},
      {{"gap_scale", "gap length of the identity gap, rational (default 1/10)"},
       [](RunConfig& c, const std::string& v) { c.model.schedule.scale = parse_positive_rational(v); }},
      {{"gap_ratio", "length ratio per word letter, rational below 1/3 (default 1/4)"},
       [](RunConfig& c, const std::string& v) { c.model.schedule.ratio = parse_positive_rational(v); }},
      {{"base_point", "pi or an exact quadratic value (default pi)"},
       [](RunConfig& c, const std::string& v) { c.model.base_point = BasePoint::parse(v); }},
      {{"t1", "translation number of h1, exact quadratic value (default 1)"},
       [](RunConfig& c, const std::string& v) { c.model.t1 = QuadVal::parse(v); }},
      {{"t2", "translation number of h2, exact quadratic value (default √2)"},
       [](RunConfig& c, const std::string& v) { c.model.t2 = QuadVal::parse(v); }},
      {{"f0", "hyperbolic word over g1 G1 g2 G2, or search (default g1g2)"},
       [](RunConfig& c, const std::string& v) {
         if (v != "search") {
           const Word w = Word::parse(v);
           if (w.empty()) throw std::invalid_argument("f0 must be a non-empty word");
           (void)word_to_matrix(w);
         }
         c.f0 = v;
       }},
      {{"search_max_len", "longest word tried by f0 = search and search-element (default 4)"},
       [](RunConfig& c, const std::string& v) { c.search_max_len = parse_int_in(v, 1, 12); }},
      {{"k_max", "largest certified k (default 14)"},
       [](RunConfig& c, const std::string& v) { c.k_max = parse_int_in(v, 0, kMaxCertifyK); }},
      {{"n_max", "horizon of the tail bound (default 40)"},
       [](RunConfig& c, const std::string& v) { c.horizons.n_max = parse_int_in(v, 1, 10000); }},
      {{"i_max", "horizon of the growth inequality (default 40)"},
       [](RunConfig& c, const std::string& v) { c.horizons.i_max = parse_int_in(v, 1, 10000); }},
      {{"k_h_max", "largest power of h1 tried by the tuner (default 8)"},
       [](RunConfig& c, const std::string& v) { c.horizons.k_h_max = parse_int_in(v, 1, 1000); }},
      {{"k_f_max", "largest power of f0 tried by the tuner (default 8)"},
       [](RunConfig& c, const std::string& v) { c.horizons.k_f_max = parse_int_in(v, 1, 1000); }},
      {{"cross_k", "k of the geometric cross-validation, 0..12 (default 6)"},
       [](RunConfig& c, const std::string& v) { c.cross_k = parse_int_in(v, 0, 12); }},
      {{"mu_j", "mu(J): auto or a positive exact value (default auto = t/2)"},
       [](RunConfig& c, const std::string& v) {
         if (v == "auto") {
           c.mu_j.reset();
           return;
         }
         const QuadVal mu = QuadVal::parse(v);
         if (mu.sign() <= 0) throw std::invalid_argument("must be positive, got " + v);
         c.mu_j = mu;
       }},
      {{"growth_A", "contraction constant A in ]0,1[ (default 1/2)"},
       [](RunConfig& c, const std::string& v) { c.growth_a = parse_positive_rational(v); }},
      {{"growth_N", "number of initial steps N (default 4)"},
       [](RunConfig& c, const std::string& v) { c.growth_n = parse_int_in(v, 0, 1000); }},
      {{"growth_J", "length of J (default 1/100)"},
       [](RunConfig& c, const std::string& v) { c.growth_j = parse_positive_rational(v); }},
      {{"growth_ab", "length of the ambient interval [a,b] (default 1)"},
       [](RunConfig& c, const std::string& v) { c.growth_ab = parse_positive_rational(v); }},
      {{"claim1_words", "number of seeded hyperbolic words in the eigenvector-disjointness suite (default 100)"},
       [](RunConfig& c, const std::string& v) { c.claim1_words = parse_int_in(v, 0, 100000); }},
      {{"torus_words", "number of seeded words in the torus fixed-point suite (default 20)"},
       [](RunConfig& c, const std::string& v) { c.torus_words = parse_int_in(v, 0, 100000); }},
      {{"residual_samples", "sample points per relation residual (default 1000)"},
       [](RunConfig& c, const std::string& v) { c.residual_samples = static_cast<std::size_t>(parse_int_in(v, 1, 10000000)); }},
      {{"rotation_iterations", "iterations per rotation-number estimate (default 10000)"},
       [](RunConfig& c, const std::string& v) { c.rotation_iterations = parse_int_in(v, 2, 100000000); }},
      {{"reversed", "probe the flat germ on the left of the fixed point (default false)"},
       [](RunConfig& c, const std::string& v) { c.reversed = parse_bool(v); }},
      {{"seed", "seed of every randomized suite (default 0)"},
       [](RunConfig& c, const std::string& v) {
         const long s = parse_long(v);
         if (s < 0) throw std::invalid_argument("must be non-negative, got " + v);
         c.seed = static_cast<std::uint64_t>(s);
       }},
      {{"output", "output directory (default rigid1d_out)"},
       [](RunConfig& c, const std::string& v) {
         if (v.empty()) throw std::invalid_argument("must not be empty");
         c.output = v;
       }},
      {{"model_file", "serialized model read by verify instead of building one (default none)"},
       [](RunConfig& c, const std::string& v) { c.model_file = v; }},
  };
  return specs;
}

void validate(const RunConfig& c, std::vector<std::string>& problems) {
  const GapSchedule& s = c.model.schedule;
  if (!s.summable()) problems.push_back("gap_ratio: the schedule is not summable (need 3 * gap_ratio < 1)");
  else if (s.materialized_total(c.model.depth) >= 1)
    problems.push_back("gap_scale: materialized gaps sum to " + s.materialized_total(c.model.depth).get_str() +
                       ", which does not fit in the unit ambient length");
  if (c.model.base_point.is_pi == false && c.model.variant == Variant::circle && c.model.base_point.value.is_zero())
    problems.push_back("base_point: 0 is the fixed direction of g1 on the circle");
  if (c.growth_a >= 1) problems.push_back("growth_A: must lie in ]0,1[, got " + c.growth_a.get_str());
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string msg = "invalid configuration:";
        for (const auto& p : problems) msg += "\n  " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = [] {
    std::vector<ConfigKey> out;
    for (const auto& s : key_specs()) out.push_back(s.doc);
    return out;
  }();
  return keys;
}

std::vector<ConfigEntry> parse_config_text(const std::string& text) {
  std::vector<ConfigEntry> out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    const std::string origin = "line " + std::to_string(lineno);
    if (eq == std::string::npos) {
      out.push_back({origin, "", t});
      continue;
    }
    out.push_back({origin, trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
  }
  return out;
}

RunConfig make_config(const std::vector<ConfigEntry>& entries) {
  RunConfig c;
  std::vector<std::string> problems;
  std::map<std::string, const KeySpec*> by_name;
  for (const auto& s : key_specs()) by_name[s.doc.name] = &s;
  for (const ConfigEntry& e : entries) {
    if (e.key.empty()) {
      problems.push_back(e.origin + ": expected 'key = value', got '" + e.value + "'");
      continue;
    }
    const auto it = by_name.find(e.key);
    if (it == by_name.end()) {
      problems.push_back(e.origin + ": unknown key '" + e.key + "'");
      continue;
    }
    try {
      it->second->set(c, e.value);
    } catch (const std::exception& ex) {
      problems.push_back(e.origin + ": " + e.key + ": " + ex.what());
    }
  }
  validate(c, problems);
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return c;
}

std::string config_to_text(const RunConfig& c) {
  std::ostringstream os;
  os << "variant = " << to_string(c.model.variant) << "\n";
  os << "depth = " << c.model.depth << "\n";
  os << "gap_scale = " << c.model.schedule.scale.get_str() << "\n";
  os << "gap_ratio = " << c.model.schedule.ratio.get_str() << "\n";
  os << "base_point = " << c.model.base_point.to_string() << "\n";
  os << "t1 = " << c.model.t1.to_string() << "\n";
  os << "t2 = " << c.model.t2.to_string() << "\n";
  os << "f0 = " << c.f0 << "\n";
  os << "search_max_len = " << c.search_max_len << "\n";
  os << "k_max = " << c.k_max << "\n";
  os << "n_max = " << c.horizons.n_max << "\n";
  os << "i_max = " << c.horizons.i_max << "\n";
  os << "k_h_max = " << c.horizons.k_h_max << "\n";
  os << "k_f_max = " << c.horizons.k_f_max << "\n";
  os << "cross_k = " << c.cross_k << "\n";
  os << "mu_j = " << (c.mu_j ? c.mu_j->to_string() : std::string("auto")) << "\n";
  os << "growth_A = " << c.growth_a.get_str() << "\n";
  os << "growth_N = " << c.growth_n << "\n";
  os << "growth_J = " << c.growth_j.get_str() << "\n";
  os << "growth_ab = " << c.growth_ab.get_str() << "\n";
  os << "claim1_words = " << c.claim1_words << "\n";
  os << "torus_words = " << c.torus_words << "\n";
  os << "residual_samples = " << c.residual_samples << "\n";
  os << "rotation_iterations = " << c.rotation_iterations << "\n";
  os << "reversed = " << (c.reversed ? "true" : "false") << "\n";
  os << "seed = " << c.seed << "\n";
  os << "output = " << c.output << "\n";
  if (!c.model_file.empty()) os << "model_file = " << c.model_file << "\n";
  return os.str();
}

}  // namespace rigid1d
