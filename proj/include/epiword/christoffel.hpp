#ifndef EPIWORD_CHRISTOFFEL_HPP
#define EPIWORD_CHRISTOFFEL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "epiword/alphabet.hpp"

namespace epiword {

/// Slope rise/run of a lower Christoffel path from (0,0) to (run, rise).
/// Letter 0 (x) is a horizontal step, letter 1 (y) a vertical one.
class Slope {
 public:
  /// Throws NonCoprime unless gcd(rise, run) == 1; 0/1 and 1/0 are allowed.
  Slope(std::int64_t rise, std::int64_t run);

  std::int64_t rise() const noexcept { return rise_; }
  std::int64_t run() const noexcept { return run_; }
  bool degenerate() const noexcept { return rise_ == 0 || run_ == 0; }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  std::int64_t rise_;
  std::int64_t run_;
};

/// Label (i*rise - j*run) / run of lattice point (i, j), kept as an exact
/// numerator over the fixed denominator run.
struct PathLabel {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  std::int64_t i = 0;
  std::int64_t j = 0;

  std::string to_string() const;
  friend bool operator==(const PathLabel&, const PathLabel&) = default;
};

Word christoffel_word(const Slope& slope);

/// All rise + run + 1 labels in path order.
std::vector<PathLabel> path_labels(const Slope& slope);

/// Split at the unique path point labelled 1/run.
std::pair<Word, Word> standard_factorization(const Slope& slope);

/// True iff w equals the Christoffel word of slope |w|_y / |w|_x.
bool is_christoffel(const Word& w);

/// ASCII drawing of the path on its lattice, top row first.
std::string render_lattice(const Slope& slope);

}  // namespace epiword

#endif  // EPIWORD_CHRISTOFFEL_HPP
