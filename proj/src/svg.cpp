#include "rigid1d/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "rigid1d/rigidity.hpp"

namespace rigid1d {

namespace {

constexpr double kWidth = 960;
constexpr double kMargin = 40;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void open_svg(std::ostream& os, const std::string& stamp, double height) {
  os << "<!-- " << stamp << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(height)
     << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(height) << "\">\n";
}

/// log10 of a positive rational without overflowing a double.
double log10_of(const Rational& q) {
  long e_num = 0, e_den = 0;
  const double m_num = mpz_get_d_2exp(&e_num, q.get_num_mpz_t());
  const double m_den = mpz_get_d_2exp(&e_den, q.get_den_mpz_t());
  return std::log10(m_num / m_den) + static_cast<double>(e_num - e_den) * std::log10(2.0);
}

}  // namespace

void write_packing_svg(std::ostream& os, const std::string& stamp, const std::optional<PackingPlot>& plot) {
  const double height = 120;
  open_svg(os, stamp, height);
  if (plot && !plot->tau.empty()) {
    const double lo = plot->tau.front();
    const double hi = plot->tau.back() + plot->mu;
    const double span = hi > lo ? hi - lo : 1.0;
    const double scale = (kWidth - 2 * kMargin) / span;
    os << "  <text x=\"" << num(kMargin) << "\" y=\"20\" font-size=\"14\">k = " << plot->k << ", "
       << plot->tau.size() << " images of J</text>\n";
    os << "  <line x1=\"" << num(kMargin) << "\" y1=\"70\" x2=\"" << num(kWidth - kMargin)
       << "\" y2=\"70\" stroke=\"#999\"/>\n";
    for (double t : plot->tau) {
      const double x = kMargin + (t - lo) * scale;
      const double w = std::max(plot->mu * scale, 0.5);
      os << "  <rect x=\"" << num(x) << "\" y=\"50\" width=\"" << num(w)
         << "\" height=\"40\" fill=\"#3465a4\" fill-opacity=\"0.8\"/>\n";
    }
    if (!plot->notice.empty())
      os << "  <text x=\"" << num(kMargin) << "\" y=\"110\" font-size=\"12\">" << plot->notice << "</text>\n";
  }
  os << "</svg>\n";
}

void write_growth_svg(std::ostream& os, const std::string& stamp, const std::optional<GrowthPlot>& plot) {
  const double height = 400;
  open_svg(os, stamp, height);
  if (plot) {
    const int k_lo = plot->n;
    const int k_hi = std::max(plot->k_star + 4, k_lo + 1);
    std::vector<double> ys;
    for (int k = k_lo; k <= k_hi; ++k) ys.push_back(log10_of(growth_bound(plot->a, plot->n, plot->j_length, k)));
    const double ambient = log10_of(plot->ambient);
    double y_min = std::min(*std::min_element(ys.begin(), ys.end()), ambient);
    double y_max = std::max(*std::max_element(ys.begin(), ys.end()), ambient);
    if (y_max - y_min < 1e-9) y_max = y_min + 1;
    const auto px = [&](int k) { return kMargin + (k - k_lo) * (kWidth - 2 * kMargin) / (k_hi - k_lo); };
    const auto py = [&](double y) { return height - kMargin - (y - y_min) * (height - 2 * kMargin) / (y_max - y_min); };
    os << "  <text x=\"" << num(kMargin) << "\" y=\"20\" font-size=\"14\">log10 of 2^k A^(3N) (3/4)^(k-N) |J|, k* = "
       << plot->k_star << "</text>\n";
    os << "  <line x1=\"" << num(px(k_lo)) << "\" y1=\"" << num(py(ambient)) << "\" x2=\"" << num(px(k_hi))
       << "\" y2=\"" << num(py(ambient)) << "\" stroke=\"#cc0000\" stroke-dasharray=\"6,4\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"#3465a4\" stroke-width=\"2\" points=\"";
    for (int k = k_lo; k <= k_hi; ++k) os << (k == k_lo ? "" : " ") << num(px(k)) << "," << num(py(ys[static_cast<std::size_t>(k - k_lo)]));
    os << "\"/>\n";
    const double ks = ys[static_cast<std::size_t>(plot->k_star - k_lo)];
    os << "  <circle cx=\"" << num(px(plot->k_star)) << "\" cy=\"" << num(py(ks)) << "\" r=\"5\" fill=\"#cc0000\"/>\n";
    os << "  <text x=\"" << num(px(plot->k_star) + 8) << "\" y=\"" << num(py(ks) - 8)
       << "\" font-size=\"12\">k* = " << plot->k_star << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace rigid1d
