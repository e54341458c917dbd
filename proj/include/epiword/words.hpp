#ifndef EPIWORD_WORDS_HPP
#define EPIWORD_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epiword/alphabet.hpp"

namespace epiword {

/// Letter counts of a word (its Parikh vector), or any k-vector fed to the
/// T operator. Entries may go negative once T has been applied.
class OccurrenceTuple {
 public:
  OccurrenceTuple() = default;
  explicit OccurrenceTuple(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {}
  OccurrenceTuple(std::initializer_list<std::int64_t> counts) : counts_(counts) {}

  static OccurrenceTuple zeros(std::size_t k) { return OccurrenceTuple(std::vector<std::int64_t>(k, 0)); }
  static OccurrenceTuple unit(std::size_t k, std::size_t m);
  /// Parses "1,2,4" (surrounding parentheses and spaces are tolerated).
  static OccurrenceTuple parse(std::string_view text);

  std::size_t size() const noexcept { return counts_.size(); }
  std::int64_t operator[](std::size_t i) const { return counts_[i]; }
  std::int64_t& operator[](std::size_t i) { return counts_[i]; }
  const std::vector<std::int64_t>& counts() const noexcept { return counts_; }

  /// Overflow-checked sum of the entries.
  std::int64_t sum() const;
  bool all_zero() const noexcept;
  bool any_negative() const noexcept;
  /// Index m when the tuple is exactly e_m.
  std::optional<std::size_t> unit_index() const noexcept;

  /// Componentwise sum (the mediant of two tuples).
  OccurrenceTuple& operator+=(const OccurrenceTuple& rhs);
  friend OccurrenceTuple operator+(OccurrenceTuple lhs, const OccurrenceTuple& rhs) { return lhs += rhs; }
  /// Componentwise scaling by a non-negative factor.
  OccurrenceTuple scaled(std::int64_t factor) const;

  friend bool operator==(const OccurrenceTuple&, const OccurrenceTuple&) = default;
  friend auto operator<=>(const OccurrenceTuple&, const OccurrenceTuple&) = default;

  /// "1,2,4"
  std::string to_string() const;
  /// "(1,2,4)"
  std::string to_paren_string() const;

 private:
  std::vector<std::int64_t> counts_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

OccurrenceTuple parikh(const Word& w);

/// The i-th conjugate w[i..] w[..i]; i is taken modulo |w|.
Word rotate(const Word& w, std::size_t i);

struct Rotation {
  Word word;
  std::size_t offset = 0;
};

/// Least conjugate via Booth's algorithm; the offset is the smallest one
/// producing it.
Rotation least_rotation(const Word& w);

bool are_conjugate(const Word& a, const Word& b);

/// Smallest p dividing |w| with w = z^(|w|/p), |z| = p.
std::size_t primitive_root_length(const Word& w);
bool is_primitive(const Word& w);
bool is_lyndon(const Word& w);

/// For every letter, any two factors of equal length differ in its count by
/// at most one. Factors are taken linearly, not cyclically.
bool is_balanced(const Word& w);

std::set<Word> factors(const Word& w, std::size_t length);

}  // namespace epiword

#endif  // EPIWORD_WORDS_HPP
