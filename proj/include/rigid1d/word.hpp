#pragma once

/// @file word.hpp
/// Words over the generator alphabet {g1, g2, h1, h2} and their inverses.
///
/// g1, g2 are the free matrix generators, h1, h2 generate Z^2. Text form
/// concatenates tokens "g1 G1 g2 G2 h1 H1 h2 H2" (upper case = inverse);
/// the empty word is written "e". A word acts right-to-left: "g1g2" is g1 o g2.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rigid1d {

enum class Letter : std::uint8_t { g1, G1, g2, G2, h1, H1, h2, H2 };

constexpr Letter inverse(Letter l) {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}
constexpr bool is_matrix_letter(Letter l) { return static_cast<std::uint8_t>(l) < 4; }
constexpr bool is_z2_letter(Letter l) { return !is_matrix_letter(l); }

std::string_view letter_token(Letter l);

/// A freely reduced word. Reduction is free cancellation only; no group relations.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces

  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool matrix_only() const;

  Word inverse() const;
  Word operator*(const Word& o) const;  // concatenation then reduction
  Word power(std::int64_t n) const;
  /// l * this, reduced.
  Word prepended(Letter l) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// h1^m h2^n as a word.
Word z2_word(std::int64_t m, std::int64_t n);

}  // namespace rigid1d
