#ifndef EPIWORD_ALPHABET_HPP
#define EPIWORD_ALPHABET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epiword {

using Letter = std::uint8_t;

/// Hard cap on the number of letters any single word may hold. Tree words grow
/// exponentially with depth, so every length computation goes through
/// checked_length() and raises ErrorKind::Overflow past this point.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 30;

std::size_t checked_length(std::size_t lhs, std::size_t rhs);

/// A finite word: a sequence of letter indices in [0, arity). Display symbols
/// are attached only when rendering through an Alphabet.
class Word {
 public:
  Word() = default;
  Word(std::size_t arity, std::vector<Letter> letters);
  Word(std::size_t arity, std::initializer_list<Letter> letters)
      : Word(arity, std::vector<Letter>(letters)) {}

  static Word letter(std::size_t arity, Letter a);
  static Word empty(std::size_t arity) { return Word(arity, std::vector<Letter>{}); }

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Letters [pos, pos + count).
  Word substr(std::size_t pos, std::size_t count) const;

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_;
  }
  /// Lexicographic order on letter indices; a proper prefix is smaller.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::size_t arity_ = 0;
  std::vector<Letter> letters_;
};

/// An ordered, finite set of display symbols. Letter i renders as symbols()[i]
/// and compares below letter i + 1.
class Alphabet {
 public:
  /// Parses an ordered symbol string such as "xyz".
  static Alphabet parse(std::string_view symbols);
  /// "xy" / "xyz" for k <= 3, otherwise "abcd..." of length k.
  static Alphabet standard(std::size_t k);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(Letter a) const;
  Letter index_of(char symbol) const;
  std::string_view symbols() const noexcept { return symbols_; }

  Word parse_word(std::string_view text) const;
  std::string render(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {}
  std::string symbols_;
};

}  // namespace epiword

#endif  // EPIWORD_ALPHABET_HPP
