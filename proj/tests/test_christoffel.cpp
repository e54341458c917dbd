#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "epiword/christoffel.hpp"
#include "epiword/error.hpp"
#include "epiword/words.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace epiword;

namespace {

const Alphabet xy = Alphabet::standard(2);

std::string str(const Word& w) { return xy.render(w); }

template <class F>
void for_each_coprime(std::int64_t max_total, F f) {
  for (std::int64_t a = 0; a <= max_total; ++a) {
    for (std::int64_t b = 0; a + b <= max_total; ++b) {
      if (std::gcd(a, b) == 1) f(a, b);
    }
  }
}

}  // namespace

TEST_CASE("slope validation") {
  CHECK(kind_of([] { Slope(2, 4); }) == ErrorKind::NonCoprime);
  CHECK(kind_of([] { Slope(0, 0); }) == ErrorKind::NonCoprime);
  CHECK(kind_of([] { Slope(-1, 2); }) == ErrorKind::InvalidArgument);
  CHECK(Slope(0, 1).degenerate());
  CHECK_FALSE(Slope(4, 7).degenerate());
}

TEST_CASE("christoffel_word") {
  CHECK(str(christoffel_word(Slope(1, 1))) == "xy");
  CHECK(str(christoffel_word(Slope(4, 7))) == "xxyxxyxxyxy");
  CHECK(str(christoffel_word(Slope(0, 1))) == "x");
  CHECK(str(christoffel_word(Slope(1, 0))) == "y");
  CHECK(str(christoffel_word(Slope(2, 3))) == "xxyxy");
}

TEST_CASE("floor-formula words agree with the lattice path for a + b <= 14") {
  for_each_coprime(14, [](std::int64_t a, std::int64_t b) {
    const auto w = christoffel_word(Slope(a, b));
    REQUIRE(w == oracle::geometric_christoffel(a, b));
    REQUIRE(w.size() == static_cast<std::size_t>(a + b));
    REQUIRE(parikh(w) == OccurrenceTuple{b, a});
  });
}

TEST_CASE("path_labels") {
  const auto unit = path_labels(Slope(1, 1));
  REQUIRE(unit.size() == 3);
  CHECK(unit[0] == PathLabel{0, 1, 0, 0});
  CHECK(unit[1] == PathLabel{1, 1, 1, 0});
  CHECK(unit[2] == PathLabel{0, 1, 1, 1});

  const auto labels = path_labels(Slope(4, 7));
  CHECK(labels.front().numerator == 0);
  const auto at = std::find_if(labels.begin(), labels.end(), [](const PathLabel& l) { return l.i == 2 && l.j == 1; });
  REQUIRE(at != labels.end());
  CHECK(at->to_string() == "1/7");
  CHECK(kind_of([] { path_labels(Slope(1, 0)); }) == ErrorKind::DegenerateSlope);
}

TEST_CASE("label invariants for a + b <= 14") {
  for_each_coprime(14, [](std::int64_t a, std::int64_t b) {
    if (b == 0) return;
    const auto labels = path_labels(Slope(a, b));
    REQUIRE(labels.size() == static_cast<std::size_t>(a + b + 1));
    REQUIRE(labels.front().numerator == 0);
    REQUIRE(labels.back().numerator == 0);
    // The first a + b points carry each numerator 0 .. a+b-1 exactly once.
    std::vector<std::int64_t> numerators;
    for (std::size_t p = 0; p + 1 < labels.size(); ++p) numerators.push_back(labels[p].numerator);
    std::sort(numerators.begin(), numerators.end());
    for (std::int64_t v = 0; v < a + b; ++v) REQUIRE(numerators[static_cast<std::size_t>(v)] == v);
    if (a >= 1 && b >= 1) {
      REQUIRE(std::count_if(labels.begin(), labels.end(), [](const PathLabel& l) { return l.numerator == 1; }) == 1);
    }
  });
}

TEST_CASE("standard_factorization") {
  auto [u, v] = standard_factorization(Slope(1, 1));
  CHECK(str(u) == "x");
  CHECK(str(v) == "y");
  std::tie(u, v) = standard_factorization(Slope(4, 7));
  CHECK(str(u) == "xxy");
  CHECK(str(v) == "xxyxxyxy");
  std::tie(u, v) = standard_factorization(Slope(1, 2));
  CHECK(str(u) == "x");
  CHECK(str(v) == "xy");
  CHECK(kind_of([] { standard_factorization(Slope(0, 1)); }) == ErrorKind::DegenerateSlope);
  CHECK(kind_of([] { standard_factorization(Slope(1, 0)); }) == ErrorKind::DegenerateSlope);
}

TEST_CASE("both standard factors are Christoffel words") {
  for_each_coprime(20, [](std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return;
    const auto [u, v] = standard_factorization(Slope(a, b));
    REQUIRE(u + v == christoffel_word(Slope(a, b)));
    REQUIRE(is_christoffel(u));
    REQUIRE(is_christoffel(v));
  });
}

TEST_CASE("is_christoffel") {
  CHECK(is_christoffel(xy.parse_word("xy")));
  CHECK(is_christoffel(xy.parse_word("xxyxy")));
  CHECK_FALSE(is_christoffel(xy.parse_word("xyxy")));
  CHECK_FALSE(is_christoffel(xy.parse_word("yx")));
  CHECK(kind_of([] { is_christoffel(Alphabet::standard(3).parse_word("xy")); }) == ErrorKind::NotBinary);
  CHECK(kind_of([] { is_christoffel(Word::empty(2)); }) == ErrorKind::EmptyWord);
}

TEST_CASE("lattice drawing marks every path point") {
  const auto art = render_lattice(Slope(1, 2));
  CHECK(art == ". . *\n    |\n*-*-*\n");
}
