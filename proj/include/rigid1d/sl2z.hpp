#pragma once

/// @file sl2z.hpp
/// Exact linear algebra on SL(2,Z): hyperbolicity, eigen-data over Q(sqrt d),
/// the eigenvector predicates behind conditions (i)-(iii), and the ordered
/// search over words in the free generating pair.

#include <array>
#include <functional>
#include <optional>

#include "rigid1d/mat2.hpp"
#include "rigid1d/quad.hpp"
#include "rigid1d/word.hpp"

namespace rigid1d {

using QuadVec = std::array<QuadVal, 2>;

/// |trace| > 2.
bool is_hyperbolic(const Mat2Z& f);
/// |trace| == 2 and f != +-I.
bool is_parabolic(const Mat2Z& f);

struct EigenData {
  QuadVal lambda_exp;  ///< eigenvalue with |lambda| > 1 (negative when trace < -2)
  QuadVal lambda_con;  ///< 1 / lambda_exp
  QuadVec v_exp;
  QuadVec v_con;
  std::int64_t field;  ///< square-free part of trace^2 - 4
};

/// Throws std::domain_error when f is not hyperbolic.
EigenData eigen_decompose(const Mat2Z& f);

QuadVec apply(const Mat2Z& f, const QuadVec& v);
/// det[v ; w] = v0*w1 - v1*w0.
QuadVal cross(const QuadVec& v, const QuadVec& w);
QuadVal dot(const QuadVec& v, const QuadVec& w);

/// True iff v and f*v are parallel. Throws std::invalid_argument for v == 0.
bool eigenvector_test(const Mat2Z& f, const QuadVec& v);

struct Conditions {
  bool i = false;    ///< rs is not an eigenvector of f^T
  bool ii = false;   ///< rs is not orthogonal to an eigenvector of f^{-1}
  bool iii = false;  ///< neither (1,0) nor (0,1) is an eigenvector of f
  bool all() const { return i && ii && iii; }
};

Conditions conditions_check(const Mat2Z& f, const QuadVec& rs);

/// The free pair [[1,2],[0,1]], [[1,0],[2,1]].
std::pair<Mat2Z, Mat2Z> sanov_generators();
Mat2Z letter_matrix(Letter l);
/// Product of the letters in written order. Throws std::invalid_argument on h-letters.
Mat2Z word_to_matrix(const Word& w);

struct WitnessedMatrix {
  Mat2Z matrix;
  Word word;

  static WitnessedMatrix from_word(const Word& w) { return {word_to_matrix(w), w}; }
};

/// Calls visit(word) for every reduced word over {g1,G1,g2,G2} with 1 <= |w| <= max_len,
/// ordered by length then lexicographically in letter order g1 < G1 < g2 < G2.
/// Stops early when visit returns false.
void for_each_reduced_word(int max_len, const std::function<bool(const Word&)>& visit);

/// Extra acceptance test applied after hyperbolicity and conditions (i)-(iii).
using CandidateFilter = std::function<bool(const WitnessedMatrix&)>;

/// First hyperbolic word (in enumeration order) passing conditions (i)-(iii) and `extra`.
std::optional<WitnessedMatrix> search_candidate(const QuadVec& rs, int max_word_len,
                                                const CandidateFilter& extra = {});

}  // namespace rigid1d
