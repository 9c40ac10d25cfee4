#include "rigid1d/word.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace rigid1d {

namespace {
constexpr std::array<std::string_view, 8> kTokens = {"g1", "G1", "g2", "G2", "h1", "H1", "h2", "H2"};

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == inverse(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}
}  // namespace

std::string_view letter_token(Letter l) { return kTokens[static_cast<std::size_t>(l)]; }

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '*' || ch == '.') {
      ++i;
      continue;
    }
    if (ch == 'e' && (i + 1 == text.size() || text[i + 1] == ' ')) {
      ++i;
      continue;
    }
    if (i + 1 >= text.size()) throw std::invalid_argument("Word::parse: truncated token in '" + std::string(text) + "'");
    const std::string_view tok = text.substr(i, 2);
    auto it = std::find(kTokens.begin(), kTokens.end(), tok);
    if (it == kTokens.end())
      throw std::invalid_argument("Word::parse: unknown token '" + std::string(tok) + "' in '" + std::string(text) + "'");
    Letter l = static_cast<Letter>(it - kTokens.begin());
    i += 2;
    // Optional integer exponent: "g1^3", "h1^-2".
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t j = i;
      if (j < text.size() && text[j] == '-') ++j;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i || (j == i + 1 && text[i] == '-'))
        throw std::invalid_argument("Word::parse: bad exponent in '" + std::string(text) + "'");
      const long e = std::stol(std::string(text.substr(i, j - i)));
      i = j;
      const Letter use = e < 0 ? rigid1d::inverse(l) : l;
      for (long k = 0; k < (e < 0 ? -e : e); ++k) push_reduced(out, use);
      continue;
    }
    push_reduced(out, l);
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

bool Word::matrix_only() const {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return is_matrix_letter(l); });
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(rigid1d::inverse(*it));
  return w;
}

Word Word::operator*(const Word& o) const {
  Word w = *this;
  for (Letter l : o.letters_) push_reduced(w.letters_, l);
  return w;
}

Word Word::power(std::int64_t n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) out = out * base;
  return out;
}

Word Word::prepended(Letter l) const {
  Word w;
  if (!letters_.empty() && letters_.front() == rigid1d::inverse(l)) {
    w.letters_.assign(letters_.begin() + 1, letters_.end());
  } else {
    w.letters_.reserve(letters_.size() + 1);
    w.letters_.push_back(l);
    w.letters_.insert(w.letters_.end(), letters_.begin(), letters_.end());
  }
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (Letter l : letters_) s += letter_token(l);
  return s;
}

Word z2_word(std::int64_t m, std::int64_t n) {
  std::vector<Letter> out;
  for (std::int64_t k = 0; k < (m < 0 ? -m : m); ++k) out.push_back(m < 0 ? Letter::H1 : Letter::h1);
  for (std::int64_t k = 0; k < (n < 0 ? -n : n); ++k) out.push_back(n < 0 ? Letter::H2 : Letter::h2);
  return Word(std::move(out));
}

}  // namespace rigid1d
