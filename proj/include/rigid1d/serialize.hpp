#pragma once

/// @file serialize.hpp
/// Flat text formats for models and disjointness certificates.
///
/// Certificate layout:
///   # rigid1d disjointness certificate
///   k <k>
///   params_hash <16 hex digits>
///   approximate true | false          true when lambda and t are only enclosed
///   <eps_1...eps_k> (x, y, d)        one line per word, sorted by tau
///   min_gap (x, y, d) | none
///   mu_J (x, y, d)
///   verdict PASS | FAIL
///   counterexample <eps> <eps>        only on FAIL

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rigid1d/action_model.hpp"
#include "rigid1d/certify_kernels.hpp"
#include "rigid1d/rigidity.hpp"

namespace rigid1d {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Hash of every quantity that determines a certificate.
std::string params_hash(const RigidityParams& params);

/// "(x, y, d)" with d replaced by `field` when the value is rational.
std::string exact_triple(const QuadVal& v, std::int64_t field);

void write_certificate(std::ostream& os, const DisjointnessCertificate& cert, const RigidityParams& params);

struct ParsedCertificate {
  int k = 0;
  std::string params_hash;
  bool approximate = false;
  std::vector<std::pair<std::string, QuadVal>> entries;
  std::optional<QuadVal> min_gap;
  QuadVal mu_j;
  bool pass = false;
  std::optional<std::pair<std::string, std::string>> counterexample;
};

/// Throws IoError on malformed input.
ParsedCertificate read_certificate(std::istream& is);

/// Re-derives the verdict from the listed values alone: 2^k distinct eps strings, sorted
/// order, consecutive gaps against mu_J and the recorded minimum.
bool recheck_certificate(const ParsedCertificate& cert);

void write_model(std::ostream& os, const ActionModel& model);
/// Rebuilds the model described by the header and checks every gap line against it.
ActionModel read_model(std::istream& is);

}  // namespace rigid1d
