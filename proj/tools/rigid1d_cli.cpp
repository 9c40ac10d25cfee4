// Command-line front end: rigid1d {construct, verify, plot, search-element}.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rigid1d/commands.hpp"
#include "rigid1d/config.hpp"

namespace {

struct ConfigOptions {
  std::string config_file;
  std::vector<std::string> sets;
  std::map<std::string, std::string> flags;
};

void add_config_options(CLI::App* app, ConfigOptions& opts) {
  app->add_option("--config", opts.config_file, "flat 'key = value' configuration file");
  app->add_option("--set", opts.sets, "override as key=value (repeatable)");
  for (const auto& key : rigid1d::config_keys())
    app->add_option("--" + key.name, opts.flags[key.name], key.help);
}

/// Loads the file, then per-key flags, then --set overrides. Returns an exit code on failure.
int load(const ConfigOptions& opts, const CLI::App* app, rigid1d::RunConfig& out) {
  std::vector<rigid1d::ConfigEntry> entries;
  if (!opts.config_file.empty()) {
    std::ifstream is(opts.config_file);
    if (!is) {
      std::cerr << "cannot read config file '" << opts.config_file << "'\n";
      return rigid1d::kExitIo;
    }
    std::stringstream ss;
    ss << is.rdbuf();
    for (auto e : rigid1d::parse_config_text(ss.str())) {
      e.origin = opts.config_file + " " + e.origin;
      entries.push_back(std::move(e));
    }
  }
  for (const auto& key : rigid1d::config_keys())
    if (app->count("--" + key.name) > 0) entries.push_back({"--" + key.name, key.name, opts.flags.at(key.name)});
  for (const auto& s : opts.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      entries.push_back({"--set " + s, "", s});
      continue;
    }
    entries.push_back({"--set " + s, s.substr(0, eq), s.substr(eq + 1)});
  }
  try {
    out = rigid1d::make_config(entries);
  } catch (const rigid1d::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return rigid1d::kExitUsage;
  }
  return -1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructions and rigidity certificates for actions of SL(2,Z) x| Z^2 and F2 x| Z^2 in dimension one"};
  app.require_subcommand(1);
  app.footer(std::string("Exit codes: 0 all certified, 2 counterexample, 64 usage, 65 construction, 66 IO.\n") +
             "CSV columns:\n  intervals.csv (verify): " + rigid1d::kIntervalsCsvColumns +
             "\n    eps is the bit string eps_1..eps_k, tau the left end of W_eps(J) in the mu-coordinate\n" +
             "  summary.csv (plot): " + rigid1d::kSummaryCsvColumns +
             "\n    min_gap is min(tau_{j+1} - tau_j) - mu(J), total_length_lower_bound is 2^k mu(J)\n" +
             "The first line of every CSV and SVG file is a generation timestamp.");

  ConfigOptions construct_opts, verify_opts, search_opts;
  auto* construct = app.add_subcommand("construct", "build and serialize the blown-up action model");
  add_config_options(construct, construct_opts);
  auto* verify = app.add_subcommand("verify", "run every certification and write the certificate bundle");
  add_config_options(verify, verify_opts);
  auto* search = app.add_subcommand("search-element", "find an element with an interior fixed point (interval model)");
  add_config_options(search, search_opts);

  std::string bundle_dir = "rigid1d_out";
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "render packing.svg, summary.csv and growth.svg from a bundle");
  plot->add_option("--bundle", bundle_dir, "directory written by verify");
  plot->add_option("--output", plot_out, "output directory (default: the bundle directory)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rigid1d::kExitUsage;
  }

  rigid1d::RunConfig config;
  if (*construct) {
    if (int rc = load(construct_opts, construct, config); rc >= 0) return rc;
    return rigid1d::cmd_construct(config, std::cout, std::cerr);
  }
  if (*verify) {
    if (int rc = load(verify_opts, verify, config); rc >= 0) return rc;
    return rigid1d::cmd_verify(config, std::cout, std::cerr);
  }
  if (*search) {
    if (int rc = load(search_opts, search, config); rc >= 0) return rc;
    return rigid1d::cmd_search_element(config, std::cout, std::cerr);
  }
  return rigid1d::cmd_plot(bundle_dir, plot_out.empty() ? bundle_dir : plot_out, std::cout, std::cerr);
}
