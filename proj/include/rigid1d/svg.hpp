#pragma once

/// @file svg.hpp
/// Minimal SVG renderings of interval packings and growth curves.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rigid1d/quad.hpp"

namespace rigid1d {

struct PackingPlot {
  int k = 0;
  double mu = 0;            ///< bar width mu(J)
  std::vector<double> tau;  ///< left ends in the mu-coordinate, sorted
  std::string notice;       ///< printed under the bars when non-empty
};

struct GrowthPlot {
  Rational a;
  int n = 0;
  Rational j_length;
  Rational ambient;
  int k_star = 0;
};

/// Every SVG starts with an XML comment carrying `stamp`, the only line that varies between runs.
void write_packing_svg(std::ostream& os, const std::string& stamp, const std::optional<PackingPlot>& plot);
void write_growth_svg(std::ostream& os, const std::string& stamp, const std::optional<GrowthPlot>& plot);

}  // namespace rigid1d
