#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "rigid1d/commands.hpp"
#include "rigid1d/serialize.hpp"

using namespace rigid1d;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("rigid1d_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig quick_config(const fs::path& out, std::vector<ConfigEntry> extra = {}) {
  std::vector<ConfigEntry> e = {{"test", "depth", "4"},        {"test", "k_max", "5"},
                                {"test", "cross_k", "3"},      {"test", "claim1_words", "10"},
                                {"test", "torus_words", "5"},  {"test", "residual_samples", "100"},
                                {"test", "rotation_iterations", "2000"}, {"test", "output", out.string()}};
  e.insert(e.end(), extra.begin(), extra.end());
  return make_config(e);
}

int run_cli(const std::string& args) {
  const int status = std::system((std::string(RIGID1D_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const RigidityParams& default_params() {
  static const RigidityParams p = tune_parameters(
      make_translation_data(WitnessedMatrix::from_word(Word::parse("g1g2")), QuadVal(1), QuadVal::sqrt_of(2)));
  return p;
}

}  // namespace

TEST_CASE("configuration text and validation") {
  const auto entries = parse_config_text("# comment\ndepth = 3\n\nvariant = circle\nnonsense line\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].origin == "line 2");
  CHECK(entries[0].key == "depth");
  CHECK(entries[2].key.empty());
  try {
    make_config(entries);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    REQUIRE(e.problems().size() == 1);
    CHECK(e.problems()[0].find("line 5") != std::string::npos);
  }
  try {
    make_config({{"line 1", "gap_scale", "1"}, {"line 2", "bogus", "1"}, {"line 3", "depth", "x"}});
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.problems().size() >= 3);
  }
  const RunConfig c = make_config({{"a", "t2", "sqrt(2)"}, {"b", "variant", "circle"}, {"c", "mu_j", "1/10"}});
  CHECK(c.rs()[1] == QuadVal::sqrt_of(2));
  CHECK(c.mu_j == QuadVal(Rational(1, 10)));
  const RunConfig round = make_config(parse_config_text(config_to_text(c)));
  CHECK(config_to_text(round) == config_to_text(c));
  CHECK_THROWS_AS(make_config({{"x", "k_max", "25"}}), ConfigError);
  CHECK_THROWS_AS(make_config({{"x", "growth_A", "1"}}), ConfigError);
}

TEST_CASE("certificates round trip and recheck") {
  const RigidityParams& p = default_params();
  const auto cert = certify_disjoint(p, 4);
  std::stringstream ss;
  write_certificate(ss, cert, p);
  const std::string text = ss.str();
  CHECK(text.rfind("# rigid1d disjointness certificate\nk 4\n", 0) == 0);
  CHECK(text.find("min_gap (-1, 15/8, 2)") != std::string::npos);
  CHECK(text.find("0000 (0, 0, 2)") != std::string::npos);
  const ParsedCertificate parsed = read_certificate(ss);
  CHECK(parsed.k == 4);
  CHECK(parsed.entries.size() == 16);
  CHECK(parsed.params_hash == params_hash(p));
  CHECK(parsed.pass);
  CHECK(recheck_certificate(parsed));
  ParsedCertificate tampered = parsed;
  std::swap(tampered.entries[3], tampered.entries[4]);
  CHECK_FALSE(recheck_certificate(tampered));
  tampered = parsed;
  tampered.mu_j = QuadVal(2);
  CHECK_FALSE(recheck_certificate(tampered));
  std::istringstream junk("# rigid1d disjointness certificate\nk four\n");
  CHECK_THROWS_AS(read_certificate(junk), IoError);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("models round trip through text") {
  const ActionModel m = ActionModel::build(ModelConfig::interval_default(3));
  std::stringstream ss;
  write_model(ss, m);
  const std::string text = ss.str();
  const ActionModel back = read_model(ss);
  CHECK(back.gaps().size() == m.gaps().size());
  std::string broken = text;
  const auto pos = broken.rfind(" 0.");
  REQUIRE(pos != std::string::npos);
  broken[pos + 3] = broken[pos + 3] == '9' ? '1' : '9';
  std::istringstream bad(broken);
  CHECK_THROWS_AS(read_model(bad), IoError);
}

TEST_CASE("construct writes a model and reports residuals") {
  const fs::path dir = fresh_dir("construct");
  std::ostringstream out, err;
  CHECK(cmd_construct(quick_config(dir, {{"t", "depth", "3"}}), out, err) == kExitOk);
  CHECK(fs::exists(dir / "model.txt"));
  CHECK(out.str().find("53") != std::string::npos);
  std::ostringstream out2, err2;
  CHECK(cmd_construct(quick_config(dir, {{"t", "base_point", "2"}}), out2, err2) == kExitConstruction);
}

TEST_CASE("verify, plot and determinism") {
  const fs::path a = fresh_dir("verify_a"), b = fresh_dir("verify_b");
  std::ostringstream out, err;
  REQUIRE(cmd_verify(quick_config(a), out, err) == kExitOk);
  REQUIRE(cmd_verify(quick_config(b), out, err) == kExitOk);
  for (int k = 0; k <= 5; ++k) {
    const std::string name = "certificate_k" + std::to_string(k) + ".txt";
    CHECK(slurp(a / name) == slurp(b / name));
  }
  CHECK(slurp(a / "bundle.txt") == slurp(b / "bundle.txt"));
  CHECK_FALSE(fs::exists(a / "counterexample.txt"));
  const std::string csv = slurp(a / "intervals.csv");
  CHECK(csv.find(std::string(kIntervalsCsvColumns) + "\n") != std::string::npos);

  const fs::path plots = fresh_dir("plots");
  CHECK(cmd_plot(a.string(), plots.string(), out, err) == kExitOk);
  const std::string svg = slurp(plots / "packing.svg");
  std::size_t rects = 0;
  for (auto pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1)) ++rects;
  CHECK(rects >= 32);
  CHECK(slurp(plots / "summary.csv").find(kSummaryCsvColumns) != std::string::npos);
  CHECK(fs::exists(plots / "growth.svg"));

  const fs::path empty = fresh_dir("empty_bundle");
  std::ofstream(empty / "bundle.txt") << "";
  CHECK(cmd_plot(empty.string(), empty.string(), out, err) == kExitOk);
  CHECK(fs::exists(empty / "packing.svg"));
  CHECK(cmd_plot((empty / "missing").string(), empty.string(), out, err) == kExitIo);
}

TEST_CASE("verify reports counterexamples and IO failures") {
  const fs::path dir = fresh_dir("verify_fail");
  std::ostringstream out, err;
  CHECK(cmd_verify(quick_config(dir, {{"t", "mu_j", "2"}, {"t", "k_max", "4"}}), out, err) == kExitCounterexample);
  CHECK(fs::exists(dir / "counterexample.txt"));
  CHECK(cmd_verify(quick_config(dir, {{"t", "model_file", (dir / "nope.txt").string()}}), out, err) == kExitIo);
}

TEST_CASE("search-element") {
  const fs::path dir = fresh_dir("search");
  std::ostringstream out, err;
  CHECK(cmd_search_element(quick_config(dir), out, err) == kExitOk);
  CHECK(out.str().find("g1g2") != std::string::npos);
  CHECK(cmd_search_element(quick_config(dir, {{"t", "variant", "circle"}}), out, err) == kExitUsage);
}

TEST_CASE("the command line binary maps failures to exit codes") {
  const fs::path dir = fresh_dir("binary");
  CHECK(run_cli("--help") == kExitOk);
  CHECK(run_cli("construct --set gap_scale=1 --output " + dir.string()) == kExitUsage);
  CHECK(run_cli("construct --no-such-flag") == kExitUsage);
  CHECK(run_cli("construct --config " + (dir / "absent.cfg").string()) == kExitIo);
  CHECK(run_cli("construct --depth 2 --output " + dir.string()) == kExitOk);
}
