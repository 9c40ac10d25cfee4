#include "rigid1d/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace rigid1d {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Splits "key rest" at the first blank.
std::pair<std::string, std::string> split_key(const std::string& line) {
  const auto sp = line.find(' ');
  if (sp == std::string::npos) return {line, {}};
  return {line.substr(0, sp), trim(line.substr(sp + 1))};
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string params_hash(const RigidityParams& p) {
  std::ostringstream os;
  os << "f0=" << p.td.f0.matrix.to_string() << ";word=" << p.td.f0.word.to_string() << ";r=" << p.td.r.to_string()
     << ";s=" << p.td.s.to_string() << ";k_h=" << p.k_h << ";k_f=" << p.k_f << ";sign=" << p.h_sign
     << ";mu=" << p.mu_j.to_string() << ";approx=" << p.approximate;
  return fnv1a_hex(os.str());
}

std::string exact_triple(const QuadVal& v, std::int64_t field) {
  const std::int64_t d = v.field() != 0 ? v.field() : field;
  return "(" + v.rational_part().get_str() + ", " + v.radical_coeff().get_str() + ", " + std::to_string(d) + ")";
}

void write_certificate(std::ostream& os, const DisjointnessCertificate& cert, const RigidityParams& params) {
  std::int64_t field = params.mu_j.field();
  for (const QuadVal& t : cert.tau)
    if (field == 0) field = t.field();
  os << "# rigid1d disjointness certificate\n";
  os << "k " << cert.k << "\n";
  os << "params_hash " << params_hash(params) << "\n";
  os << "approximate " << (params.approximate ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < cert.count(); ++i) os << eps_bits(cert.eps[i], cert.k) << " " << exact_triple(cert.tau[i], field) << "\n";
  os << "min_gap " << (cert.min_gap ? exact_triple(*cert.min_gap, field) : std::string("none")) << "\n";
  os << "mu_J " << exact_triple(cert.mu_j, field) << "\n";
  os << "verdict " << (cert.pass ? "PASS" : "FAIL") << "\n";
  if (cert.counterexample)
    os << "counterexample " << eps_bits(cert.counterexample->first, cert.k) << " "
       << eps_bits(cert.counterexample->second, cert.k) << "\n";
}

ParsedCertificate read_certificate(std::istream& is) {
  ParsedCertificate c;
  std::string line;
  bool have_k = false, have_mu = false, have_verdict = false;
  int lineno = 0;
  auto fail = [&](const std::string& why) { return IoError("certificate line " + std::to_string(lineno) + ": " + why); };
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto [key, rest] = split_key(line);
    try {
      if (key == "k") {
        c.k = std::stoi(rest);
        have_k = true;
      } else if (key == "params_hash") {
        c.params_hash = rest;
      } else if (key == "approximate") {
        if (rest != "true" && rest != "false") throw fail("approximate must be true or false");
        c.approximate = rest == "true";
      } else if (key == "min_gap") {
        if (rest != "none") c.min_gap = QuadVal::parse(rest);
      } else if (key == "mu_J") {
        c.mu_j = QuadVal::parse(rest);
        have_mu = true;
      } else if (key == "verdict") {
        if (rest != "PASS" && rest != "FAIL") throw fail("verdict must be PASS or FAIL");
        c.pass = rest == "PASS";
        have_verdict = true;
      } else if (key == "counterexample") {
        auto [a, b] = split_key(rest);
        c.counterexample = std::make_pair(a, b);
      } else if (key == "-" || key.find_first_not_of("01") == std::string::npos) {
        c.entries.emplace_back(key, QuadVal::parse(rest));
      } else {
        throw fail("unknown record '" + key + "'");
      }
    } catch (const IoError&) {
      throw;
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
  }
  if (!have_k || !have_mu || !have_verdict) throw IoError("certificate is missing k, mu_J or verdict");
  return c;
}

bool recheck_certificate(const ParsedCertificate& c) {
  if (c.k < 0 || c.k > kMaxCertifyK) return false;
  if (c.entries.size() != (std::size_t{1} << c.k)) return false;
  std::set<std::string> seen;
  for (const auto& [eps, tau] : c.entries) {
    (void)tau;
    if (static_cast<int>(eps.size()) != std::max(c.k, 1) && !(c.k == 0 && eps == "-")) return false;
    if (!seen.insert(eps).second) return false;
  }
  bool pass = true;
  std::optional<QuadVal> min_gap;
  for (std::size_t i = 0; i + 1 < c.entries.size(); ++i) {
    if (c.entries[i + 1].second < c.entries[i].second) return false;
    const QuadVal gap = c.entries[i + 1].second - c.entries[i].second - c.mu_j;
    if (!(gap > QuadVal(0))) pass = false;
    if (!min_gap || gap < *min_gap) min_gap = gap;
  }
  if (min_gap.has_value() != c.min_gap.has_value()) return false;
  if (min_gap && !(*min_gap == *c.min_gap)) return false;
  return pass == c.pass;
}

void write_model(std::ostream& os, const ActionModel& model) {
  const ModelConfig& c = model.config();
  os << "# rigid1d action model\n";
  os << "variant " << to_string(c.variant) << "\n";
  os << "depth " << c.depth << "\n";
  os << "gap_scale " << c.schedule.scale.get_str() << "\n";
  os << "gap_ratio " << c.schedule.ratio.get_str() << "\n";
  os << "base_point " << c.base_point.to_string() << "\n";
  os << "t1 " << c.t1.to_string() << "\n";
  os << "t2 " << c.t2.to_string() << "\n";
  os << "gaps " << model.gaps().size() << "\n";
  os << "materialized_length " << model.materialized_length().get_str() << "\n";
  os << "# word depth length left right\n";
  for (const Gap& g : model.gaps())
    os << g.word.to_string() << " " << g.depth << " " << g.length.get_str() << " " << fmt_double(g.left) << " "
       << fmt_double(g.right) << "\n";
}

ActionModel read_model(std::istream& is) {
  std::map<std::string, std::string> header;
  std::vector<std::string> gap_lines;
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto [key, rest] = split_key(line);
    static const std::set<std::string> keys = {"variant", "depth", "gap_scale",  "gap_ratio",          "base_point",
                                               "t1",      "t2",    "gaps",       "materialized_length"};
    if (keys.count(key)) {
      header[key] = rest;
    } else {
      gap_lines.push_back(line);
    }
  }
  for (const char* k : {"variant", "depth", "gap_scale", "gap_ratio", "base_point", "t1", "t2", "gaps"})
    if (!header.count(k)) throw IoError(std::string("model file is missing '") + k + "'");
  ModelConfig c;
  try {
    c.variant = parse_variant(header["variant"]);
    c.depth = std::stoi(header["depth"]);
    c.schedule.scale = parse_rational(header["gap_scale"]);
    c.schedule.ratio = parse_rational(header["gap_ratio"]);
    c.base_point = BasePoint::parse(header["base_point"]);
    c.t1 = QuadVal::parse(header["t1"]);
    c.t2 = QuadVal::parse(header["t2"]);
  } catch (const std::exception& e) {
    throw IoError(std::string("model file header: ") + e.what());
  }
  ActionModel model = ActionModel::build(c);
  const auto& gaps = model.gaps();
  if (std::to_string(gaps.size()) != header["gaps"] || gap_lines.size() != gaps.size())
    throw IoError("model file lists " + std::to_string(gap_lines.size()) + " gaps, the rebuilt model has " +
                  std::to_string(gaps.size()));
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    std::istringstream ls(gap_lines[i]);
    std::string word, length;
    int depth = 0;
    double left = 0, right = 0;
    if (!(ls >> word >> depth >> length >> left >> right))
      throw IoError("model file gap line " + std::to_string(i + 1) + " is malformed");
    const Gap& g = gaps[i];
    if (word != g.word.to_string() || depth != g.depth || length != g.length.get_str() ||
        std::abs(left - g.left) > 1e-12 || std::abs(right - g.right) > 1e-12)
      throw IoError("model file gap line " + std::to_string(i + 1) + " (" + word +
                    ") does not match the rebuilt model");
  }
  return model;
}

}  // namespace rigid1d
