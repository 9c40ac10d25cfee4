#include "rigid1d/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rigid1d/certify_kernels.hpp"

namespace rigid1d {

namespace {

QuadVal int_quad(long v) { return QuadVal(Rational(BigInt(v))); }

/// Candidate effective values for one (k_h, k_f); exact or enclosed.
struct Candidate {
  bool exact = true;
  QuadVal lambda, t, t_prime;
  Enclosure lambda_enc, t_enc, t_prime_enc;
};

std::vector<InequalityCheck> eq2_exact(const QuadVal& lambda, const QuadVal& t, int first, int last) {
  std::vector<InequalityCheck> out;
  const QuadVal lm1 = lambda - QuadVal(1);
  QuadVal lam_i = lambda.pow(static_cast<unsigned>(std::max(first, 0)));
  for (int i = first; i <= last; ++i) {
    const QuadVal rhs = t * (lam_i - (lam_i - QuadVal(1)) / lm1);
    out.push_back({i, int_quad(i) <= rhs, static_cast<double>(i), rhs.to_double()});
    lam_i *= lambda;
  }
  return out;
}

std::vector<InequalityCheck> eq2_enclosed(const Enclosure& lambda, const Enclosure& t, int first, int last) {
  std::vector<InequalityCheck> out;
  const Enclosure lm1 = lambda - Enclosure(1.0);
  for (int i = first; i <= last; ++i) {
    const Enclosure lam_i = lambda.pow(static_cast<unsigned>(std::max(i, 0)));
    const Enclosure rhs = t * (lam_i - (lam_i - Enclosure(1.0)) / lm1);
    out.push_back({i, certainly_le(Enclosure(static_cast<double>(i)), rhs), static_cast<double>(i), rhs.lo()});
  }
  return out;
}

std::vector<InequalityCheck> eq3_exact(const QuadVal& lambda, const QuadVal& t_prime, int first, int last) {
  std::vector<InequalityCheck> out;
  const QuadVal inv = QuadVal(1) / lambda;
  QuadVal inv_n = inv.pow(static_cast<unsigned>(std::max(first, 0)));
  for (int n = first; n <= last; ++n) {
    const QuadVal lhs = (inv_n * t_prime).abs();
    out.push_back({n, lhs <= QuadVal(1), lhs.to_double(), 1.0});
    inv_n *= inv;
  }
  return out;
}

std::vector<InequalityCheck> eq3_enclosed(const Enclosure& lambda, const Enclosure& t_prime, int first, int last) {
  std::vector<InequalityCheck> out;
  const Enclosure inv = Enclosure(1.0) / lambda;
  for (int n = first; n <= last; ++n) {
    const Enclosure lhs = (inv.pow(static_cast<unsigned>(std::max(n, 0))) * t_prime).abs();
    out.push_back({n, certainly_le(lhs, Enclosure(1.0)), lhs.hi(), 1.0});
  }
  return out;
}

std::string first_failure(const std::vector<InequalityCheck>& checks, const char* name) {
  for (const auto& c : checks)
    if (!c.pass) {
      std::ostringstream os;
      os << name << " fails at index " << c.index << " (lhs " << c.lhs << ", rhs " << c.rhs << ")";
      return os.str();
    }
  return {};
}

}  // namespace

QuadVal RigidityParams::tau(long j) const {
  return int_quad(static_cast<long>(h_sign) * k_h) * conjugate_translation_number(td, j * k_f);
}

std::string RigidityParams::summary() const {
  std::ostringstream os;
  os << "k_h = " << k_h << ", k_f = " << k_f << ", h1 sign = " << (h_sign > 0 ? "+" : "-");
  if (approximate) {
    os << ", lambda in " << lambda_enc.to_string() << ", t in " << t_enc.to_string() << " (approximate)";
  } else {
    os << ", lambda = " << lambda->to_string() << ", t = " << t->to_string() << ", t' = " << t_prime->to_string();
  }
  os << ", mu(J) = " << mu_j.to_string();
  return os.str();
}

RigidityParams tune_parameters(const TranslationData& td, const Horizons& horizons) {
  if (horizons.k_h_max < 1 || horizons.k_f_max < 1 || horizons.n_max < 1 || horizons.i_max < 1)
    throw std::invalid_argument("tune_parameters: horizons must be >= 1");
  int h_sign = 1;
  if (td.exact()) {
    if (td.t->is_zero())
      throw ConditionViolation("t = 0: (r, s) is orthogonal to the expanding eigenvector (condition (ii) fails)");
    h_sign = td.t->sign();
  } else {
    const int s = td.t_enc.certain_sign();
    if (s == 0) throw ConditionViolation("the enclosure of t contains 0; condition (ii) cannot be certified");
    h_sign = s;
  }

  std::string last;
  for (int k_h = 1; k_h <= horizons.k_h_max; ++k_h) {
    for (int k_f = 1; k_f <= horizons.k_f_max; ++k_f) {
      const long scale = static_cast<long>(h_sign) * k_h;
      const std::string where = " (k_h = " + std::to_string(k_h) + ", k_f = " + std::to_string(k_f) + ")";
      RigidityParams p;
      p.td = td;
      p.k_h = k_h;
      p.k_f = k_f;
      p.h_sign = h_sign;
      p.horizons = horizons;
      p.approximate = !td.exact();
      std::vector<InequalityCheck> eq2, eq3;
      if (td.exact()) {
        const QuadVal lambda = td.eigen.lambda_exp.pow(static_cast<unsigned>(k_f));
        const QuadVal t = int_quad(scale) * *td.t;
        const QuadVal tp = int_quad(scale) * *td.t_prime;
        if (!(lambda > QuadVal(2))) {
          last = "lambda = " + lambda.to_string() + " is not > 2" + where;
          continue;
        }
        if (!(lambda * t > QuadVal(1))) {
          last = "lambda t = " + (lambda * t).to_string() + " is not > 1" + where;
          continue;
        }
        p.lambda = lambda;
        p.t = t;
        p.t_prime = tp;
        p.lambda_enc = Enclosure::of(lambda);
        p.t_enc = Enclosure::of(t);
        p.t_prime_enc = Enclosure::of(tp);
        p.mu_j = t / QuadVal(2);
        eq2 = eq2_exact(lambda, t, 1, horizons.i_max);
        eq3 = eq3_exact(lambda, tp, 1, horizons.n_max);
      } else {
        const Enclosure lambda = td.lambda_enc.pow(static_cast<unsigned>(k_f));
        const Enclosure t = Enclosure(static_cast<double>(scale)) * td.t_enc;
        const Enclosure tp = Enclosure(static_cast<double>(scale)) * td.t_prime_enc;
        if (!certainly_lt(Enclosure(2.0), lambda)) {
          last = "lambda in " + lambda.to_string() + " is not certainly > 2" + where;
          continue;
        }
        if (!certainly_lt(Enclosure(1.0), lambda * t)) {
          last = "lambda t in " + (lambda * t).to_string() + " is not certainly > 1" + where;
          continue;
        }
        p.lambda_enc = lambda;
        p.t_enc = t;
        p.t_prime_enc = tp;
        // A rational strictly below t/2 keeps 0 < mu(J) < t certain.
        p.mu_j = QuadVal(Rational(t.lo()) / 2);
        eq2 = eq2_enclosed(lambda, t, 1, horizons.i_max);
        eq3 = eq3_enclosed(lambda, tp, 1, horizons.n_max);
      }
      if (!(p.mu_j > QuadVal(0))) {
        last = "mu(J) is not positive" + where;
        continue;
      }
      if (auto f = first_failure(eq2, "the growth inequality"); !f.empty()) {
        last = f + where;
        continue;
      }
      if (auto f = first_failure(eq3, "the tail bound"); !f.empty()) {
        last = f + where;
        continue;
      }
      return p;
    }
  }
  throw TuningError("tune_parameters: no (k_h, k_f) within the horizons; last failure: " + last, last);
}

void set_mu_j(RigidityParams& params, const QuadVal& mu) {
  if (!(mu > QuadVal(0))) throw std::invalid_argument("mu(J) must be positive");
  params.mu_j = mu;
}

std::vector<InequalityCheck> check_eq2(const RigidityParams& params, int first, int last) {
  if (params.approximate) return eq2_enclosed(params.lambda_enc, params.t_enc, first, last);
  return eq2_exact(*params.lambda, *params.t, first, last);
}

std::vector<InequalityCheck> check_eq3(const RigidityParams& params, int first, int last) {
  if (params.approximate) return eq3_enclosed(params.lambda_enc, params.t_prime_enc, first, last);
  return eq3_exact(*params.lambda, *params.t_prime, first, last);
}

void enumerate_words(const RigidityParams& params, int k,
                     const std::function<void(std::uint32_t, const QuadVal&)>& visit) {
  if (k < 0 || k > kMaxCertifyK) throw std::invalid_argument("enumerate_words: k out of range");
  std::vector<QuadVal> taus;
  for (int j = 1; j <= k; ++j) taus.push_back(params.tau(j));
  QuadVal sum;
  const std::uint32_t n = std::uint32_t{1} << k;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (e > 0) {
      // Binary increment: clear the trailing ones, set the next bit.
      const std::uint32_t prev = e - 1;
      for (int b = 0; b < k; ++b) {
        const std::uint32_t bit = std::uint32_t{1} << b;
        if (prev & bit) {
          sum -= taus[static_cast<std::size_t>(b)];
        } else {
          sum += taus[static_cast<std::size_t>(b)];
          break;
        }
      }
    }
    visit(e, sum);
  }
}

DisjointnessCertificate certify_disjoint(const RigidityParams& params, int k, Kernel kernel) {
  if (k < 0 || k > kMaxCertifyK) throw std::invalid_argument("certify_disjoint: k out of range");
  std::vector<QuadVal> taus;
  for (int j = 1; j <= k; ++j) taus.push_back(params.tau(j));
  SortedSums sorted = kernel == Kernel::serial ? subset_sums_sorted_serial(taus) : subset_sums_sorted_parallel(taus);
  DisjointnessCertificate cert;
  cert.k = k;
  cert.mu_j = params.mu_j;
  cert.eps = std::move(sorted.eps);
  cert.tau = std::move(sorted.value);
  for (std::size_t i = 0; i + 1 < cert.tau.size(); ++i) {
    QuadVal gap = cert.tau[i + 1] - cert.tau[i] - params.mu_j;
    if (!(gap > QuadVal(0)) && !cert.counterexample) {
      cert.pass = false;
      cert.counterexample = std::make_pair(cert.eps[i], cert.eps[i + 1]);
    }
    if (!cert.min_gap || gap < *cert.min_gap) cert.min_gap = std::move(gap);
  }
  return cert;
}

DisjointnessCertificate certify_disjoint_serial(const RigidityParams& params, int k) {
  return certify_disjoint(params, k, Kernel::serial);
}

std::vector<QuadVal> separation_margins(const RigidityParams& params, int k) {
  std::vector<QuadVal> out;
  QuadVal prefix;
  for (int i = 1; i <= k; ++i) {
    const QuadVal ti = params.tau(i);
    out.push_back(ti - prefix - params.mu_j);
    prefix += ti;
  }
  return out;
}

std::string eps_bits(std::uint32_t eps, int k) {
  std::string s;
  for (int j = 0; j < k; ++j) s.push_back(((eps >> j) & 1u) ? '1' : '0');
  return s.empty() ? "-" : s;
}

Word claim3_word(const RigidityParams& params, std::uint32_t eps, int k) {
  const Word f = params.td.f0.word.power(params.k_f);
  const Word h = z2_word(static_cast<std::int64_t>(params.h_sign) * params.k_h, 0);
  Word w;
  for (int j = k; j >= 1; --j) {
    if (!((eps >> (j - 1)) & 1u)) continue;
    w = w * (f.power(-j) * h * f.power(j));
  }
  return w;
}

CrossValidationReport cross_validate_geometric(const ActionModel& model, const RigidityParams& params, int k) {
  if (k < 0 || k > 12) throw std::invalid_argument("cross_validate_geometric: k must lie in [0, 12]");
  CrossValidationReport rep;
  rep.k = k;
  const DisjointnessCertificate exact = certify_disjoint_serial(params, k);
  const std::size_t n = exact.count();
  rep.words = n;
  const double half = params.mu_j.to_double() / 2;
  const Mat2Z id;
  const std::size_t f_len = params.td.f0.word.size();
  std::vector<double> model_lo(n);
  std::vector<double> exact_tau(n);
  for (std::size_t i = 0; i < n; ++i) exact_tau[exact.eps[i]] = exact.tau[i].to_double();
  for (std::uint32_t e = 0; e < n; ++e) {
    const Word w = claim3_word(params, e, k);
    const SymPoint lo = model.apply(w, model.gap_point(id, -half));
    const SymPoint hi = model.apply(w, model.gap_point(id, half));
    int top = 0;
    for (int j = 1; j <= k; ++j)
      if ((e >> (j - 1)) & 1u) top = j;
    if (static_cast<std::size_t>(top) * static_cast<std::size_t>(params.k_f) * f_len >
        static_cast<std::size_t>(model.depth()))
      ++rep.depth_flags;
    const double tau = exact_tau[e];
    const double tol = 1e-9 * std::max(1.0, std::abs(tau));
    const bool home = lo.in_gap && hi.in_gap && lo.label == id && hi.label == id;
    const double err = home ? std::max(std::abs(lo.y - (-half + tau)), std::abs(hi.y - (half + tau)))
                            : std::numeric_limits<double>::infinity();
    rep.max_value_error = std::max(rep.max_value_error, err);
    if (!(err <= tol)) ++rep.value_mismatches;
    model_lo[e] = home ? lo.y : std::numeric_limits<double>::quiet_NaN();
  }
  std::vector<std::uint32_t> model_order(n);
  std::iota(model_order.begin(), model_order.end(), 0u);
  std::stable_sort(model_order.begin(), model_order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return model_lo[a] < model_lo[b]; });
  for (std::size_t i = 0; i < n; ++i)
    if (model_order[i] != exact.eps[i]) ++rep.ordering_mismatches;
  return rep;
}

Rational growth_bound(const Rational& a, int n, const Rational& j_length, int k) {
  if (k < n) throw std::invalid_argument("growth_bound: the bound needs k >= N");
  Rational out = j_length;
  for (int i = 0; i < 3 * n; ++i) out *= a;
  for (int i = 0; i < n; ++i) out *= 2;
  for (int i = n; i < k; ++i) out *= Rational(3, 2);
  out.canonicalize();
  return out;
}

GrowthCertificate growth_contradiction(const Rational& a, int n, const Rational& j_length, const Rational& ambient) {
  if (!(a > 0 && a < 1)) throw std::invalid_argument("growth_contradiction: A must satisfy 0 < A < 1");
  if (n < 0) throw std::invalid_argument("growth_contradiction: N must be >= 0");
  if (!(j_length > 0) || !(ambient > 0)) throw std::invalid_argument("growth_contradiction: lengths must be positive");
  GrowthCertificate g{a, n, j_length, ambient, n, growth_bound(a, n, j_length, n)};
  while (!(g.bound_at_k_star > ambient)) {
    g.bound_at_k_star *= Rational(3, 2);
    ++g.k_star;
  }
  g.bound_at_k_star.canonicalize();
  return g;
}

FlatGermReport flat_germ_probe(const LocalMap& f, bool reversed) {
  constexpr mpfr_prec_t prec = 256;
  const BigReal zero(prec);
  if (f(zero).sign() != 0) throw std::invalid_argument("flat_germ_probe: f does not fix the endpoint a");
  FlatGermReport rep;
  rep.reversed = reversed;
  const int side = reversed ? -1 : 1;
  BigInt denom = 100;
  for (int m = 2; m <= 5; ++m, denom *= 10) {
    BigReal h = BigReal::from_rational(Rational(1, 1) / Rational(denom), MPFR_RNDN, prec);
    BigReal delta = side > 0 ? h : -h;
    // g(delta) = side * exp(-1/delta^2).
    BigReal e = exp(-(BigReal(1.0, prec) / (delta * delta)));
    BigReal gd = side > 0 ? e : -e;
    BigReal y = f(gd);
    if (y.sign() != side) throw std::domain_error("flat_germ_probe: f moves points across the endpoint");
    BigReal mag = side > 0 ? y : -y;
    // g^{-1}(y) = side / sqrt(-ln |y|).
    BigReal back = BigReal(1.0, prec) / sqrt(-log(mag));
    if (side < 0) back = -back;
    rep.scales.push_back(h.to_double());
    rep.quotients.push_back((back / delta).to_double());
  }
  rep.monotone_toward_one = true;
  for (std::size_t i = 1; i < rep.quotients.size(); ++i)
    if (std::abs(rep.quotients[i] - 1) > std::abs(rep.quotients[i - 1] - 1)) rep.monotone_toward_one = false;
  rep.final_deviation = std::abs(rep.quotients.back() - 1);
  return rep;
}

std::optional<InteriorFixedElement> interior_fixed_element_search(const ActionModel& model, const QuadVec& rs,
                                                                  int max_len, int resolution) {
  if (model.variant() != Variant::interval)
    throw std::invalid_argument("interior_fixed_element_search: needs the interval model");
  double location = 0;
  auto found = search_candidate(rs, max_len, [&](const WitnessedMatrix& w) {
    const FixedPointReport rep = find_fixed_points(model, w.word, resolution);
    if (!rep.has_interior()) return false;
    location = rep.interior.front();
    return true;
  });
  if (!found) return std::nullopt;
  return InteriorFixedElement{*found, location};
}

}  // namespace rigid1d
