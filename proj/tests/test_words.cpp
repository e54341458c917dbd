#include <doctest.h>

#include <random>

#include "epiword/christoffel.hpp"
#include "epiword/error.hpp"
#include "epiword/words.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace epiword;

namespace {

const Alphabet xyz = Alphabet::standard(3);
const Alphabet xy = Alphabet::standard(2);

Word w3(const char* s) { return xyz.parse_word(s); }
Word w2(const char* s) { return xy.parse_word(s); }

Word random_word(std::mt19937& rng, std::size_t k, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(k) - 1);
  std::vector<Letter> out(len(rng));
  for (auto& c : out) c = static_cast<Letter>(letter(rng));
  return Word(k, std::move(out));
}

}  // namespace

TEST_CASE("alphabet parsing and rendering") {
  CHECK(xyz.symbols() == "xyz");
  CHECK(Alphabet::standard(5).symbols() == "abcde");
  CHECK(xyz.render(w3("xzyzzyz")) == "xzyzzyz");
  CHECK(kind_of([] { Alphabet::parse("xyx"); }) == ErrorKind::InvalidAlphabet);
  CHECK(kind_of([] { Alphabet::parse(""); }) == ErrorKind::InvalidAlphabet);
  CHECK(kind_of([] { xyz.parse_word("xa"); }) == ErrorKind::InvalidLetter);
  CHECK(kind_of([] { Word(2, {0, 2}); }) == ErrorKind::InvalidLetter);
}

TEST_CASE("word concatenation is length checked") {
  CHECK(w3("xy") + w3("z") == w3("xyz"));
  CHECK(kind_of([] { checked_length(kMaxWordLength, 1); }) == ErrorKind::Overflow);
  CHECK(checked_length(kMaxWordLength - 1, 1) == kMaxWordLength);
}

TEST_CASE("parikh") {
  CHECK(parikh(Word::empty(3)) == OccurrenceTuple{0, 0, 0});
  CHECK(parikh(w3("xzyzzyz")) == OccurrenceTuple{1, 2, 4});
  CHECK(parikh(w3("yzyyzyx")) == OccurrenceTuple{1, 4, 2});
}

TEST_CASE("occurrence tuple parsing") {
  CHECK(OccurrenceTuple::parse("1,2,4") == OccurrenceTuple{1, 2, 4});
  CHECK(OccurrenceTuple::parse("(2, -1, 2)") == OccurrenceTuple{2, -1, 2});
  CHECK(OccurrenceTuple{2, -1, 2}.to_paren_string() == "(2,-1,2)");
  CHECK(kind_of([] { OccurrenceTuple::parse("1,,2"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { OccurrenceTuple::parse("1,a"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { OccurrenceTuple{1, 2} + OccurrenceTuple{1, 2, 3}; }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { OccurrenceTuple{INT64_MAX, 1}.sum(); }) == ErrorKind::Overflow);
}

TEST_CASE("rotate") {
  CHECK(rotate(w2("xy"), 1) == w2("yx"));
  CHECK(rotate(w3("zyzzyzx"), 6) == w3("xzyzzyz"));
  CHECK(rotate(w3("zyzzyzx"), 0) == w3("zyzzyzx"));
  CHECK(rotate(Word::empty(3), 4).empty());
  CHECK(rotate(w3("xyz"), 4) == w3("yzx"));
}

TEST_CASE("least_rotation") {
  auto r = least_rotation(w3("zyzzyzx"));
  CHECK(r.word == w3("xzyzzyz"));
  CHECK(r.offset == 6);
  r = least_rotation(w3("yzyyzyx"));
  CHECK(r.word == w3("xyzyyzy"));
  CHECK(r.offset == 6);
  r = least_rotation(w2("xy"));
  CHECK(r.word == w2("xy"));
  CHECK(r.offset == 0);
  // Ties on a non-primitive word resolve to the smallest offset.
  CHECK(least_rotation(w2("yxyx")).offset == 1);
  CHECK(kind_of([] { least_rotation(Word::empty(2)); }) == ErrorKind::EmptyWord);
}

TEST_CASE("least_rotation matches the naive oracle on all 3-letter words up to length 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    oracle::for_each_word(3, n, [](const Word& w) {
      const auto fast = least_rotation(w);
      const auto [word, offset] = oracle::least_rotation(w);
      REQUIRE(fast.word == word);
      REQUIRE(fast.offset == offset);
    });
  }
}

TEST_CASE("canonical form is rotation invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = random_word(rng, 3, 24);
    const auto canonical = least_rotation(w).word;
    for (std::size_t i = 0; i < w.size(); ++i) REQUIRE(least_rotation(rotate(w, i)).word == canonical);
  }
}

TEST_CASE("are_conjugate") {
  CHECK(are_conjugate(w3("zyzzyzx"), w3("xzyzzyz")));
  CHECK(are_conjugate(w3("xy"), w3("xy")));
  CHECK_FALSE(are_conjugate(w3("xy"), w3("xz")));
  CHECK_FALSE(are_conjugate(w3("xy"), w3("xyx")));
}

TEST_CASE("primitivity and Lyndon words") {
  CHECK_FALSE(is_primitive(w2("xyxy")));
  CHECK(is_primitive(w2("x")));
  CHECK(is_primitive(w3("xzyzzyz")));
  CHECK(is_lyndon(w3("xzyzzyz")));
  CHECK_FALSE(is_lyndon(w2("xx")));
  CHECK_FALSE(is_lyndon(w2("yx")));
  CHECK(kind_of([] { is_primitive(Word::empty(2)); }) == ErrorKind::EmptyWord);
  CHECK(kind_of([] { is_lyndon(Word::empty(2)); }) == ErrorKind::EmptyWord);

  for (std::size_t n = 1; n <= 9; ++n) {
    oracle::for_each_word(3, n, [](const Word& w) {
      REQUIRE(is_lyndon(w) == oracle::is_lyndon(w));
      if (is_lyndon(w)) REQUIRE(is_primitive(w));
    });
  }
}

TEST_CASE("balance") {
  CHECK_FALSE(is_balanced(w2("xxyy")));
  CHECK(is_balanced(w2("xy")));
  CHECK(is_balanced(w2("xxyxxyxxyxy")));
  CHECK(kind_of([] { is_balanced(Word::empty(2)); }) == ErrorKind::EmptyWord);
  for (std::size_t n = 1; n <= 7; ++n) {
    oracle::for_each_word(3, n, [](const Word& w) { REQUIRE(is_balanced(w) == oracle::is_balanced(w)); });
  }
}

TEST_CASE("factors") {
  CHECK(factors(w2("xy"), 1) == std::set<Word>{w2("x"), w2("y")});
  CHECK(factors(w2("xxy"), 2) == std::set<Word>{w2("xx"), w2("xy")});
  CHECK(factors(w2("xy"), 0) == std::set<Word>{Word::empty(2)});
  CHECK(factors(w2("xy"), 3).empty());
}

TEST_CASE("parikh is additive") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = random_word(rng, 4, 15);
    const auto v = random_word(rng, 4, 15);
    REQUIRE(parikh(u + v) == parikh(u) + parikh(v));
    REQUIRE(parikh(u).sum() == static_cast<std::int64_t>(u.size()));
  }
}

TEST_CASE("balanced Lyndon binary words are exactly the Christoffel words (length <= 12)") {
  for (std::size_t n = 1; n <= 12; ++n) {
    oracle::for_each_word(2, n, [](const Word& w) {
      const auto counts = parikh(w);
      bool christoffel = false;
      if (std::gcd(counts[0], counts[1]) == 1) christoffel = christoffel_word(Slope(counts[1], counts[0])) == w;
      REQUIRE((is_lyndon(w) && is_balanced(w)) == christoffel);
    });
  }
}
