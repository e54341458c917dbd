#ifndef EPIWORD_TREES_HPP
#define EPIWORD_TREES_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "epiword/alphabet.hpp"
#include "epiword/epichristoffel.hpp"
#include "epiword/error.hpp"
#include "epiword/words.hpp"

namespace epiword {

// ---------------------------------------------------------------------------
// Word trees
// ---------------------------------------------------------------------------

/// A node (u, v) of a Christoffel or epichristoffel tree. Children are
/// computed on demand: left = (u, uv), right = (uv, v).
struct TreeNode {
  Word u;
  Word v;

  Word word() const { return u + v; }
  TreeNode left() const { return {u, u + v}; }
  TreeNode right() const { return {u + v, v}; }
  OccurrenceTuple tuple() const { return parikh(u) + parikh(v); }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

enum class PathStep { L, R };

/// "R L R"; the empty path renders as "(root)".
std::string format_path(const std::vector<PathStep>& path);
TreeNode follow(TreeNode node, const std::vector<PathStep>& path);

/// A finite, materialized part of a word tree.
struct Tree {
  TreeNode node;
  std::vector<Tree> children;  // empty or {left, right}

  friend bool operator==(const Tree&, const Tree&) = default;
};

/// Complete tree of the given depth below `root`; depth 0 is the root alone.
Tree grow(const TreeNode& root, std::size_t depth);

/// Nodes of each depth 0..depth, left to right.
std::vector<std::vector<TreeNode>> tree_levels(const TreeNode& root, std::size_t depth);

/// Root (x, y) over the binary alphabet.
TreeNode christoffel_root();
Tree christoffel_tree(std::size_t depth);

/// Root of the epichristoffel tree of an admissible tuple together with the
/// data it was derived from.
struct EpiTreeRoot {
  OccurrenceTuple tuple;
  Word epi_word;
  CanonicalSplit split;  // the c-word factorization (u, v)
  bool prefix_matches_u = false;  // root prefix taken with length |u| (else |v|)
  TreeNode node;         // (u', v')
  OccurrenceTuple u_tuple;
  OccurrenceTuple v_tuple;
};

/// The root (u', v') is read off the epichristoffel word w of p: u' is the
/// prefix of length |u| when it equals the epichristoffel word of parikh(u),
/// otherwise the prefix of length |v| (which must then equal the
/// epichristoffel word of parikh(v)); v' is the rest.
EpiTreeRoot epichristoffel_root(const OccurrenceTuple& p);
Tree epichristoffel_tree(const OccurrenceTuple& p, std::size_t depth);

// ---------------------------------------------------------------------------
// Stern-Brocot sequences over fractions and tuples
// ---------------------------------------------------------------------------

/// num/den with den == 0 allowed for the formal fraction 1/0.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

inline Fraction mediant(const Fraction& a, const Fraction& b) {
  return {checked_add(a.num, b.num), checked_add(a.den, b.den)};
}

/// Throws DimensionMismatch on tuples of different sizes.
inline OccurrenceTuple mediant(const OccurrenceTuple& a, const OccurrenceTuple& b) { return a + b; }

inline std::string value_to_string(const Fraction& f) { return f.to_string(); }
inline std::string value_to_string(const OccurrenceTuple& t) { return t.to_paren_string(); }

/// Fraction |w|_y / |w|_x of a binary tuple (x count first).
inline Fraction fraction_of(const OccurrenceTuple& t) { return {t[1], t[0]}; }

inline constexpr Fraction kSternBrocotLow{0, 1};
inline constexpr Fraction kSternBrocotHigh{1, 0};

template <class T>
struct SBLevel {
  std::size_t index = 0;
  std::vector<T> entries;  // 2^(index-1) mediants, left to right
};

/// The full sequence S_i: the seeds with i rounds of mediants inserted.
template <class T>
std::vector<T> stern_brocot_sequence(const T& low, const T& high, std::size_t i) {
  std::vector<T> seq{low, high};
  for (std::size_t round = 0; round < i; ++round) {
    std::vector<T> next;
    next.reserve(2 * seq.size() - 1);
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
      next.push_back(seq[j]);
      next.push_back(mediant(seq[j], seq[j + 1]));
    }
    next.push_back(seq.back());
    seq = std::move(next);
  }
  return seq;
}

/// Levels 1..count: the mediants created by each round.
template <class T>
std::vector<SBLevel<T>> stern_brocot_levels(const T& low, const T& high, std::size_t count) {
  if (count >= 48) throw Error(ErrorKind::Overflow, "too many Stern-Brocot levels requested");
  std::vector<SBLevel<T>> levels;
  std::vector<T> seq{low, high};
  for (std::size_t level = 1; level <= count; ++level) {
    SBLevel<T> out{level, {}};
    std::vector<T> next;
    next.reserve(2 * seq.size() - 1);
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
      next.push_back(seq[j]);
      auto m = mediant(seq[j], seq[j + 1]);
      out.entries.push_back(m);
      next.push_back(std::move(m));
    }
    next.push_back(seq.back());
    seq = std::move(next);
    levels.push_back(std::move(out));
  }
  return levels;
}

inline std::vector<SBLevel<Fraction>> classical_stern_brocot_levels(std::size_t count) {
  return stern_brocot_levels(kSternBrocotLow, kSternBrocotHigh, count);
}

/// Entry `position` (0-based, from the left) of level `level` >= 1, found by
/// descending from the root instead of materializing the level.
template <class T>
T stern_brocot_entry(T low, T high, std::size_t level, std::uint64_t position) {
  if (level == 0 || level > 63) throw Error(ErrorKind::Overflow, "Stern-Brocot level out of range");
  const auto depth = level - 1;
  if (position >> depth != 0) throw Error(ErrorKind::InvalidArgument, "position beyond level width");
  T node = mediant(low, high);
  for (std::size_t bit = depth; bit-- > 0;) {
    if ((position >> bit) & 1U) {
      low = node;
    } else {
      high = node;
    }
    node = mediant(low, high);
  }
  return node;
}

enum class Side { Left, Right };

/// L_k / R_k: the k-th entry from the given side of each level, skipping the
/// levels with fewer than k entries. Entries are computed on demand.
template <class T>
class Diagonal {
 public:
  Diagonal(T low, T high, Side side, std::size_t k)
      : low_(std::move(low)), high_(std::move(high)), side_(side), k_(k) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "diagonal index k must be >= 1");
    // Level l holds 2^(l-1) entries.
    first_level_ = static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(k - 1))) + 1;
  }

  Side side() const noexcept { return side_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t first_level() const noexcept { return first_level_; }

  /// Entry j (0-based) of the diagonal.
  T operator[](std::size_t j) const {
    const auto level = first_level_ + j;
    if (level > 63) throw Error(ErrorKind::Overflow, "diagonal entry beyond representable levels");
    const std::uint64_t width = std::uint64_t{1} << (level - 1);
    const std::uint64_t position = side_ == Side::Left ? k_ - 1 : width - k_;
    return stern_brocot_entry(low_, high_, level, position);
  }

  std::vector<T> take(std::size_t n) const {
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) out.push_back((*this)[j]);
    return out;
  }

 private:
  T low_;
  T high_;
  Side side_;
  std::size_t k_;
  std::size_t first_level_ = 1;
};

/// L_{1+}: the right seed followed by L_1 (1/0, 1/1, 1/2, ... classically).
template <class T>
std::vector<T> left_diagonal_one_plus(const T& low, const T& high, std::size_t n) {
  std::vector<T> out;
  if (n == 0) return out;
  out.push_back(high);
  auto rest = Diagonal<T>(low, high, Side::Left, 1).take(n - 1);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

template <class T>
std::vector<T> mediant_sum(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out;
  const auto n = std::min(a.size(), b.size());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(mediant(a[i], b[i]));
  return out;
}

/// Checks the first `terms` entries of L_{2k} and L_{2k+1} against the
/// diagonal recurrences for k = 2^i (2j + 1):
///   L_{2k}   = L_k (+) L_{1+}   (j = 0),   L_k (+) L_{j+1}   (j > 0)
///   L_{2k+1} = L_{k+1} (+) L_{j+1}
template <class T>
bool diagonal_sum_check(const T& low, const T& high, std::size_t k, std::size_t terms) {
  if (k == 0 || terms == 0) throw Error(ErrorKind::InvalidArgument, "diagonal_sum_check needs k, terms >= 1");
  const auto odd = k >> std::countr_zero(k);
  const auto j = (odd - 1) / 2;
  auto left = [&](std::size_t index) { return Diagonal<T>(low, high, Side::Left, index).take(terms); };
  const auto even_rhs = j == 0 ? left_diagonal_one_plus(low, high, terms) : left(j + 1);
  return left(2 * k) == mediant_sum(left(k), even_rhs) && left(2 * k + 1) == mediant_sum(left(k + 1), left(j + 1));
}

/// Fraction row recurrences: for every row n in [2, rows] and every k, the
/// k-th entry from the left of row n+1 is a/(a+b) where a/b is the k-th from
/// the left of row n, and the k-th from the right is (a+b)/b where a/b is the
/// k-th from the right of row n. `levels` must hold rows 1..rows+1.
bool row_successor_check(const std::vector<SBLevel<Fraction>>& levels, std::size_t rows);
bool row_successor_check(std::size_t rows);

/// Position-wise comparison of the Christoffel tree images |uv|_y/|uv|_x
/// with the classical Stern-Brocot levels down to `depth`.
bool tree_isomorphism_check(std::size_t depth);

/// A materialized Stern-Brocot tree (root = first mediant of the seeds).
template <class T>
struct ValueTree {
  T value;
  std::vector<ValueTree> children;

  friend bool operator==(const ValueTree&, const ValueTree&) = default;
};

template <class T>
ValueTree<T> stern_brocot_tree(const T& low, const T& high, std::size_t depth) {
  ValueTree<T> node{mediant(low, high), {}};
  if (depth > 0) {
    node.children.push_back(stern_brocot_tree(low, node.value, depth - 1));
    node.children.push_back(stern_brocot_tree(node.value, high, depth - 1));
  }
  return node;
}

// ---------------------------------------------------------------------------
// Navigation and factorizability
// ---------------------------------------------------------------------------

/// Root-to-node path of `target` in the tree whose root factors have tuples
/// (u_tuple, v_tuple). Every node tuple is alpha*u_tuple + beta*v_tuple with
/// alpha, beta >= 1 coprime; the path is read off by subtractive Euclid on
/// (alpha, beta). Throws NotInTree when no such pair exists.
std::vector<PathStep> path_to_tuple(const OccurrenceTuple& u_tuple, const OccurrenceTuple& v_tuple,
                                    const OccurrenceTuple& target);
std::vector<PathStep> path_to_tuple(const EpiTreeRoot& root, const OccurrenceTuple& target);

/// The word u v at the node of the epichristoffel tree of `root_tuple` whose
/// tuple is `target`.
Word resolve_epichristoffel(const OccurrenceTuple& root_tuple, const OccurrenceTuple& target);

struct FactorizabilityReport {
  struct NodeEntry {
    std::vector<PathStep> path;
    TreeNode node;
    bool u_epichristoffel = false;
    bool v_epichristoffel = false;
    bool factorizable() const noexcept { return u_epichristoffel && v_epichristoffel; }
  };
  struct DiagonalEntry {
    TreeNode node;
    std::vector<std::pair<Word, Word>> factorizations;
  };

  std::vector<NodeEntry> nodes;  // breadth first, left to right
  bool root_v_epichristoffel = false;
  /// R_1 down to the depth; filled only when the root's v is not an
  /// epichristoffel word.
  std::vector<DiagonalEntry> right_diagonal;

  bool all_factorizable() const noexcept;
  bool right_diagonal_unfactorizable() const noexcept;
};

FactorizabilityReport classify_factorizability(const TreeNode& root, std::size_t depth);
FactorizabilityReport classify_factorizability(const OccurrenceTuple& root_tuple, std::size_t depth);

}  // namespace epiword

#endif  // EPIWORD_TREES_HPP
