#include "epiword/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "epiword/error.hpp"

namespace epiword {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyWord: return "empty word";
    case ErrorKind::InvalidLetter: return "invalid letter";
    case ErrorKind::InvalidAlphabet: return "invalid alphabet";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::NonCoprime: return "not coprime";
    case ErrorKind::DegenerateSlope: return "degenerate slope";
    case ErrorKind::NotBinary: return "not binary";
    case ErrorKind::AllZero: return "all-zero tuple";
    case ErrorKind::NotAdmissible: return "not admissible";
    case ErrorKind::TrivialTuple: return "trivial tuple";
    case ErrorKind::NotEpichristoffel: return "not epichristoffel";
    case ErrorKind::RootSelectionFailure: return "root selection failure";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::NotInTree: return "not in tree";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

std::size_t checked_length(std::size_t lhs, std::size_t rhs) {
  if (lhs > kMaxWordLength || rhs > kMaxWordLength - lhs) {
    throw Error(ErrorKind::Overflow, "word length exceeds " + std::to_string(kMaxWordLength));
  }
  return lhs + rhs;
}

Word::Word(std::size_t arity, std::vector<Letter> letters)
    : arity_(arity), letters_(std::move(letters)) {
  if (letters_.size() > kMaxWordLength) {
    throw Error(ErrorKind::Overflow, "word length exceeds " + std::to_string(kMaxWordLength));
  }
  for (Letter a : letters_) {
    if (a >= arity_) {
      throw Error(ErrorKind::InvalidLetter,
                  "letter index " + std::to_string(a) + " outside alphabet of size " +
                      std::to_string(arity_));
    }
  }
}

Word Word::letter(std::size_t arity, Letter a) { return Word(arity, std::vector<Letter>{a}); }

Word Word::substr(std::size_t pos, std::size_t count) const {
  Word out;
  out.arity_ = arity_;
  if (pos < letters_.size()) {
    const auto n = std::min(count, letters_.size() - pos);
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + n));
  }
  return out;
}

Word& Word::operator+=(const Word& rhs) {
  if (arity_ == 0) arity_ = rhs.arity_;
  if (rhs.arity_ != 0 && rhs.arity_ != arity_) {
    throw Error(ErrorKind::DimensionMismatch, "concatenating words over different alphabets");
  }
  checked_length(letters_.size(), rhs.letters_.size());
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Alphabet Alphabet::parse(std::string_view symbols) {
  if (symbols.empty()) {
    throw Error(ErrorKind::InvalidAlphabet, "alphabet must contain at least one symbol");
  }
  if (symbols.size() > 255) {
    throw Error(ErrorKind::InvalidAlphabet, "alphabet too large");
  }
  std::string s(symbols);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
      throw Error(ErrorKind::InvalidAlphabet, "alphabet symbols must be printable, got whitespace");
    }
    if (s.find(s[i], i + 1) != std::string::npos) {
      throw Error(ErrorKind::InvalidAlphabet, std::string("duplicate symbol '") + s[i] + "'");
    }
  }
  return Alphabet(std::move(s));
}

Alphabet Alphabet::standard(std::size_t k) {
  if (k == 0 || k > 26) {
    throw Error(ErrorKind::InvalidAlphabet, "standard alphabet needs 1 <= k <= 26");
  }
  if (k <= 3) return Alphabet(std::string("xyz").substr(0, k));
  std::string s;
  for (std::size_t i = 0; i < k; ++i) s.push_back(static_cast<char>('a' + i));
  return Alphabet(std::move(s));
}

char Alphabet::symbol(Letter a) const {
  if (a >= symbols_.size()) {
    throw Error(ErrorKind::InvalidLetter, "letter index " + std::to_string(a) + " outside alphabet");
  }
  return symbols_[a];
}

Letter Alphabet::index_of(char symbol) const {
  const auto pos = symbols_.find(symbol);
  if (pos == std::string::npos) {
    throw Error(ErrorKind::InvalidLetter,
                std::string("symbol '") + symbol + "' not in alphabet \"" + symbols_ + "\"");
  }
  return static_cast<Letter>(pos);
}

Word Alphabet::parse_word(std::string_view text) const {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(index_of(c));
  return Word(size(), std::move(letters));
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(symbol(a));
  return out;
}

}  // namespace epiword
