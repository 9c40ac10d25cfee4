#pragma once

/// @file commands.hpp
/// The four CLI subcommands as library functions returning process exit codes.
///
/// verify writes into the output directory:
///   certificate_k<K>.txt   one per k = 0..k_max, byte-identical across runs
///   bundle.txt             tuned parameters, certificate index, suite verdicts
///   intervals.csv          sorted images of J per k (columns below)
///   counterexample.txt     only when some check fails
/// plot reads bundle.txt and writes packing.svg, summary.csv and growth.svg.

#include <iosfwd>
#include <string>

#include "rigid1d/config.hpp"

namespace rigid1d {

enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 2,
  kExitUsage = 64,
  kExitConstruction = 65,
  kExitIo = 66,
};

inline constexpr const char* kIntervalsCsvColumns = "k,rank,eps,tau,tau_plus_mu";
inline constexpr const char* kSummaryCsvColumns = "k,min_gap,total_length_lower_bound,count";

/// Builds the configured model, writes <output>/model.txt and prints a summary with a
/// relation-residual table.
int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Runs the full certification pipeline. 0 when every check passes, 2 otherwise.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Renders the bundle in `bundle_dir` into `output_dir`.
int cmd_plot(const std::string& bundle_dir, const std::string& output_dir, std::ostream& out, std::ostream& err);

/// First element with an interior fixed point on the interval model; 2 when none is found.
int cmd_search_element(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rigid1d
