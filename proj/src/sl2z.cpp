#include "rigid1d/sl2z.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace rigid1d {

bool is_hyperbolic(const Mat2Z& f) { return std::llabs(f.trace()) > 2; }

bool is_parabolic(const Mat2Z& f) {
  return std::llabs(f.trace()) == 2 && !(f.b() == 0 && f.c() == 0);
}

EigenData eigen_decompose(const Mat2Z& f) {
  if (!is_hyperbolic(f)) throw std::domain_error("eigen_decompose: " + f.to_string() + " is not hyperbolic");
  const std::int64_t tr = f.trace();
  const QuadVal root = QuadVal::sqrt_of(tr * tr - 4);
  const QuadVal half(Rational(1, 2));
  // Expanding eigenvalue has the sign of the trace.
  const QuadVal lam = tr > 0 ? (QuadVal(tr) + root) * half : (QuadVal(tr) - root) * half;
  const QuadVal lam_con = tr > 0 ? (QuadVal(tr) - root) * half : (QuadVal(tr) + root) * half;

  auto eigenvector = [&](const QuadVal& l) -> QuadVec {
    if (f.b() != 0) return {QuadVal(f.b()), l - QuadVal(f.a())};
    return {l - QuadVal(f.d()), QuadVal(f.c())};
  };
  return EigenData{lam, lam_con, eigenvector(lam), eigenvector(lam_con), root.radicand()};
}

QuadVec apply(const Mat2Z& f, const QuadVec& v) {
  return {QuadVal(f.a()) * v[0] + QuadVal(f.b()) * v[1], QuadVal(f.c()) * v[0] + QuadVal(f.d()) * v[1]};
}

QuadVal cross(const QuadVec& v, const QuadVec& w) { return v[0] * w[1] - v[1] * w[0]; }
QuadVal dot(const QuadVec& v, const QuadVec& w) { return v[0] * w[0] + v[1] * w[1]; }

bool eigenvector_test(const Mat2Z& f, const QuadVec& v) {
  if (v[0].is_zero() && v[1].is_zero()) throw std::invalid_argument("eigenvector_test: zero vector");
  return cross(v, apply(f, v)).is_zero();
}

Conditions conditions_check(const Mat2Z& f, const QuadVec& rs) {
  Conditions c;
  c.i = !eigenvector_test(f.transpose(), rs);
  // w . rs == 0 exactly when w is parallel to (s, -r).
  c.ii = !eigenvector_test(f.inverse(), QuadVec{rs[1], -rs[0]});
  c.iii = f.b() != 0 && f.c() != 0;
  return c;
}

std::pair<Mat2Z, Mat2Z> sanov_generators() { return {Mat2Z(1, 2, 0, 1), Mat2Z(1, 0, 2, 1)}; }

Mat2Z letter_matrix(Letter l) {
  static const auto gens = sanov_generators();
  switch (l) {
    case Letter::g1: return gens.first;
    case Letter::G1: return gens.first.inverse();
    case Letter::g2: return gens.second;
    case Letter::G2: return gens.second.inverse();
    default: throw std::invalid_argument("letter_matrix: '" + std::string(letter_token(l)) + "' is not a matrix letter");
  }
}

Mat2Z word_to_matrix(const Word& w) {
  Mat2Z m;
  for (Letter l : w.letters()) m = m * letter_matrix(l);
  return m;
}

void for_each_reduced_word(int max_len, const std::function<bool(const Word&)>& visit) {
  std::vector<Letter> cur;
  bool stop = false;
  std::function<void(int)> rec = [&](int remaining) {
    if (stop) return;
    if (remaining == 0) {
      if (!visit(Word(cur))) stop = true;
      return;
    }
    for (std::uint8_t k = 0; k < 4 && !stop; ++k) {
      const auto l = static_cast<Letter>(k);
      if (!cur.empty() && cur.back() == inverse(l)) continue;
      cur.push_back(l);
      rec(remaining - 1);
      cur.pop_back();
    }
  };
  for (int len = 1; len <= max_len && !stop; ++len) rec(len);
}

std::optional<WitnessedMatrix> search_candidate(const QuadVec& rs, int max_word_len, const CandidateFilter& extra) {
  std::optional<WitnessedMatrix> found;
  for_each_reduced_word(max_word_len, [&](const Word& w) {
    const Mat2Z m = word_to_matrix(w);
    if (!is_hyperbolic(m)) return true;
    if (!conditions_check(m, rs).all()) return true;
    WitnessedMatrix cand{m, w};
    if (extra && !extra(cand)) return true;
    found = std::move(cand);
    return false;
  });
  return found;
}

}  // namespace rigid1d
