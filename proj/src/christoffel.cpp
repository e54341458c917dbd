#include "epiword/christoffel.hpp"

#include <numeric>

#include "epiword/error.hpp"
#include "epiword/words.hpp"

namespace epiword {

namespace {

constexpr Letter kX = 0;
constexpr Letter kY = 1;

std::size_t path_length(const Slope& slope) {
  return checked_length(static_cast<std::size_t>(slope.rise()), static_cast<std::size_t>(slope.run()));
}

}  // namespace

Slope::Slope(std::int64_t rise, std::int64_t run) : rise_(rise), run_(run) {
  if (rise < 0 || run < 0) {
    throw Error(ErrorKind::InvalidArgument, "slope components must be non-negative");
  }
  if (std::gcd(rise, run) != 1) {
    throw Error(ErrorKind::NonCoprime, std::to_string(rise) + "/" + std::to_string(run) + " is not coprime");
  }
}

std::string PathLabel::to_string() const {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

Word christoffel_word(const Slope& slope) {
  const auto n = static_cast<std::int64_t>(path_length(slope));
  const auto a = slope.rise();
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n));
  std::int64_t previous = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto current = checked_mul(k, a) / n;
    letters.push_back(current > previous ? kY : kX);
    previous = current;
  }
  return Word(2, std::move(letters));
}

std::vector<PathLabel> path_labels(const Slope& slope) {
  if (slope.run() == 0) {
    throw Error(ErrorKind::DegenerateSlope, "labels are undefined for slope 1/0");
  }
  const auto w = christoffel_word(slope);
  std::vector<PathLabel> labels;
  labels.reserve(w.size() + 1);
  std::int64_t i = 0;
  std::int64_t j = 0;
  auto push = [&] {
    labels.push_back({checked_add(checked_mul(i, slope.rise()), -checked_mul(j, slope.run())), slope.run(), i, j});
  };
  push();
  for (Letter c : w) {
    (c == kX ? i : j) += 1;
    push();
  }
  return labels;
}

std::pair<Word, Word> standard_factorization(const Slope& slope) {
  if (slope.degenerate()) {
    throw Error(ErrorKind::DegenerateSlope, "standard factorization needs rise, run >= 1");
  }
  const auto labels = path_labels(slope);
  std::size_t split = 0;
  std::size_t hits = 0;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if (labels[p].numerator == 1) {
      split = p;
      ++hits;
    }
  }
  if (hits != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "expected exactly one point labelled 1/b, found " + std::to_string(hits));
  }
  const auto w = christoffel_word(slope);
  return {w.substr(0, split), w.substr(split, w.size() - split)};
}

bool is_christoffel(const Word& w) {
  if (w.arity() != 2) throw Error(ErrorKind::NotBinary, "Christoffel words live over a two-letter alphabet");
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "is_christoffel requires a non-empty word");
  const auto counts = parikh(w);
  if (std::gcd(counts[kY], counts[kX]) != 1) return false;
  return christoffel_word(Slope(counts[kY], counts[kX])) == w;
}

std::string render_lattice(const Slope& slope) {
  const auto w = christoffel_word(slope);
  const auto width = static_cast<std::size_t>(2 * slope.run() + 1);
  const auto height = static_cast<std::size_t>(2 * slope.rise() + 1);
  std::vector<std::string> grid(height, std::string(width, ' '));
  for (std::size_t r = 0; r < height; r += 2) {
    for (std::size_t c = 0; c < width; c += 2) grid[r][c] = '.';
  }
  std::size_t col = 0;
  std::size_t row = 0;
  grid[row][col] = '*';
  for (Letter c : w) {
    if (c == kX) {
      grid[row][col + 1] = '-';
      col += 2;
    } else {
      grid[row + 1][col] = '|';
      row += 2;
    }
    grid[row][col] = '*';
  }
  std::string out;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    auto line = *it;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace epiword
