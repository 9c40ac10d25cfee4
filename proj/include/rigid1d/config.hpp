#pragma once

/// @file config.hpp
/// Run configuration: a flat "key = value" file plus command-line overrides.
///
/// Every value is exact (integers, rationals, quadratic values such as "1/2+3/4√2" or
/// "(x, y, d)"), so a configuration fully determines a run. Problems are collected
/// over the whole input and reported together, each tagged with its origin.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigid1d/action_model.hpp"
#include "rigid1d/certify_kernels.hpp"
#include "rigid1d/rigidity.hpp"

namespace rigid1d {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// One key/value assignment and where it came from ("line 7", "--depth", ...).
struct ConfigEntry {
  std::string origin;
  std::string key;
  std::string value;
};

struct RunConfig {
  ModelConfig model = ModelConfig::interval_default(8);
  /// Word over g1, G1, g2, G2, or "search" for the first candidate passing (i)-(iii).
  std::string f0 = "g1g2";
  int search_max_len = 4;
  int k_max = 14;
  Horizons horizons;
  int cross_k = 6;
  std::optional<QuadVal> mu_j;  ///< empty: the tuner's default t/2
  Rational growth_a{1, 2};
  int growth_n = 4;
  Rational growth_j{1, 100};
  Rational growth_ab{1};
  int claim1_words = 100;
  int torus_words = 20;
  std::size_t residual_samples = 1000;
  long rotation_iterations = 10000;
  bool reversed = false;  ///< flat-germ probe on the left side of the fixed point
  std::uint64_t seed = 0;
  std::string output = "rigid1d_out";
  std::string model_file;  ///< empty: build the model from the fields above

  QuadVec rs() const { return {model.t1, model.t2}; }
};

struct ConfigKey {
  std::string name;
  std::string help;
};

/// Every accepted key in documentation order.
const std::vector<ConfigKey>& config_keys();

/// Parses "key = value" lines; blank lines and '#' comments are skipped. Malformed lines
/// are returned as entries with an empty key so that they are reported with the rest.
std::vector<ConfigEntry> parse_config_text(const std::string& text);

/// Applies entries in order over the defaults and validates the result.
/// Throws ConfigError listing every problem.
RunConfig make_config(const std::vector<ConfigEntry>& entries);

/// Canonical "key = value" text for a configuration.
std::string config_to_text(const RunConfig& config);

}  // namespace rigid1d
