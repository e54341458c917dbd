#include "epiword/trees.hpp"

#include <numeric>
#include <stdexcept>

namespace epiword {

std::string format_path(const std::vector<PathStep>& path) {
  if (path.empty()) return "(root)";
  std::string out;
  for (auto step : path) {
    if (!out.empty()) out += ' ';
    out += step == PathStep::L ? 'L' : 'R';
  }
  return out;
}

TreeNode follow(TreeNode node, const std::vector<PathStep>& path) {
  for (auto step : path) node = step == PathStep::L ? node.left() : node.right();
  return node;
}

Tree grow(const TreeNode& root, std::size_t depth) {
  Tree tree{root, {}};
  if (depth > 0) {
    tree.children.reserve(2);
    tree.children.push_back(grow(root.left(), depth - 1));
    tree.children.push_back(grow(root.right(), depth - 1));
  }
  return tree;
}

std::vector<std::vector<TreeNode>> tree_levels(const TreeNode& root, std::size_t depth) {
  std::vector<std::vector<TreeNode>> levels{{root}};
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<TreeNode> next;
    next.reserve(2 * levels.back().size());
    for (const auto& node : levels.back()) {
      next.push_back(node.left());
      next.push_back(node.right());
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

TreeNode christoffel_root() { return {Word::letter(2, 0), Word::letter(2, 1)}; }

Tree christoffel_tree(std::size_t depth) { return grow(christoffel_root(), depth); }

EpiTreeRoot epichristoffel_root(const OccurrenceTuple& p) {
  EpiTreeRoot root;
  root.tuple = p;
  root.split = canonical_split(p);
  root.epi_word = epichristoffel_word_of(p);
  const auto& w = root.epi_word;

  const auto u_len = root.split.u.size();
  const auto v_len = root.split.v.size();
  const bool u_fits = w.substr(0, u_len) == epichristoffel_word_of(root.split.u_tuple);
  const bool v_fits = w.substr(0, v_len) == epichristoffel_word_of(root.split.v_tuple);
  if (u_fits == v_fits && (!u_fits || u_len != v_len)) {
    throw Error(ErrorKind::RootSelectionFailure,
                std::string(u_fits ? "both prefixes" : "no prefix") + " of the epichristoffel word of " +
                    p.to_paren_string() + " match its split");
  }
  root.prefix_matches_u = u_fits;
  const auto cut = u_fits ? u_len : v_len;
  root.node = {w.substr(0, cut), w.substr(cut, w.size() - cut)};
  root.u_tuple = parikh(root.node.u);
  root.v_tuple = parikh(root.node.v);
  return root;
}

Tree epichristoffel_tree(const OccurrenceTuple& p, std::size_t depth) {
  return grow(epichristoffel_root(p).node, depth);
}

bool row_successor_check(const std::vector<SBLevel<Fraction>>& levels, std::size_t rows) {
  if (rows < 2 || levels.size() < rows + 1) {
    throw Error(ErrorKind::InvalidArgument, "row_successor_check needs rows >= 2 and rows + 1 levels");
  }
  for (std::size_t n = 2; n <= rows; ++n) {
    const auto& row = levels[n - 1].entries;
    const auto& next = levels[n].entries;
    const auto width = row.size();
    for (std::size_t k = 0; k < width; ++k) {
      const auto& a = row[k];
      if (next[k] != Fraction{a.num, checked_add(a.num, a.den)}) return false;
      const auto& b = row[width - 1 - k];
      if (next[next.size() - 1 - k] != Fraction{checked_add(b.num, b.den), b.den}) return false;
    }
  }
  return true;
}

bool row_successor_check(std::size_t rows) {
  return row_successor_check(classical_stern_brocot_levels(rows + 1), rows);
}

bool tree_isomorphism_check(std::size_t depth) {
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "tree_isomorphism_check needs depth >= 1");
  const auto words = tree_levels(christoffel_root(), depth);
  const auto fractions = classical_stern_brocot_levels(depth + 1);
  for (std::size_t d = 0; d <= depth; ++d) {
    const auto& nodes = words[d];
    const auto& entries = fractions[d].entries;
    if (nodes.size() != entries.size()) return false;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (fraction_of(nodes[i].tuple()) != entries[i]) return false;
    }
  }
  return true;
}

std::vector<PathStep> path_to_tuple(const OccurrenceTuple& u_tuple, const OccurrenceTuple& v_tuple,
                                    const OccurrenceTuple& target) {
  if (u_tuple.size() != target.size() || v_tuple.size() != target.size()) {
    throw Error(ErrorKind::DimensionMismatch, "target and root tuples differ in size");
  }
  if (u_tuple.all_zero() || v_tuple.all_zero() || u_tuple.any_negative() || v_tuple.any_negative()) {
    throw Error(ErrorKind::InvalidArgument, "root factor tuples must be non-negative and non-zero");
  }
  const auto not_in_tree = [&](const std::string& why) {
    return Error(ErrorKind::NotInTree, target.to_paren_string() + " is not in the tree: " + why);
  };

  // Solve target = alpha * u + beta * v over the positive integers; every
  // coordinate has to agree.
  std::size_t pivot = 0;
  while (v_tuple[pivot] == 0) ++pivot;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  bool solvable = false;
  for (std::int64_t a = 1;; ++a) {
    auto residual = target;
    bool fits = true;
    for (std::size_t i = 0; i < target.size(); ++i) {
      residual[i] = checked_add(target[i], -checked_mul(a, u_tuple[i]));
      fits = fits && residual[i] >= 0;
    }
    if (!fits) break;
    if (residual[pivot] % v_tuple[pivot] != 0) continue;
    const auto b = residual[pivot] / v_tuple[pivot];
    if (b < 1 || v_tuple.scaled(b) != residual) continue;
    solvable = true;
    if (std::gcd(a, b) == 1) {
      alpha = a;
      beta = b;
      break;
    }
  }
  if (alpha == 0) {
    throw not_in_tree(solvable ? "coefficients are not coprime" : "no positive integer combination of the root factors");
  }

  // At (u, v) the target is alpha*u + beta*v; the left child (u, uv) rewrites
  // it as (alpha - beta)*u + beta*(uv), the right child (uv, v) as
  // alpha*(uv) + (beta - alpha)*v. Steps come out root first.
  std::vector<PathStep> path;
  while (alpha != beta) {
    if (alpha > beta) {
      path.push_back(PathStep::L);
      alpha -= beta;
    } else {
      path.push_back(PathStep::R);
      beta -= alpha;
    }
  }
  return path;
}

std::vector<PathStep> path_to_tuple(const EpiTreeRoot& root, const OccurrenceTuple& target) {
  return path_to_tuple(root.u_tuple, root.v_tuple, target);
}

Word resolve_epichristoffel(const OccurrenceTuple& root_tuple, const OccurrenceTuple& target) {
  const auto root = epichristoffel_root(root_tuple);
  const auto node = follow(root.node, path_to_tuple(root, target));
  auto word = node.word();
  if (parikh(word) != target) {
    throw std::logic_error("tree navigation reached " + parikh(word).to_paren_string() + " instead of " +
                           target.to_paren_string());
  }
  return word;
}

bool FactorizabilityReport::all_factorizable() const noexcept {
  for (const auto& n : nodes) {
    if (!n.factorizable()) return false;
  }
  return true;
}

bool FactorizabilityReport::right_diagonal_unfactorizable() const noexcept {
  if (right_diagonal.empty()) return false;
  for (const auto& d : right_diagonal) {
    if (!d.factorizations.empty()) return false;
  }
  return true;
}

FactorizabilityReport classify_factorizability(const TreeNode& root, std::size_t depth) {
  FactorizabilityReport report;
  std::vector<std::pair<std::vector<PathStep>, TreeNode>> frontier{{{}, root}};
  for (std::size_t d = 0; d <= depth; ++d) {
    std::vector<std::pair<std::vector<PathStep>, TreeNode>> next;
    for (auto& [path, node] : frontier) {
      report.nodes.push_back({path, node, is_epichristoffel_word(node.u), is_epichristoffel_word(node.v)});
      if (d == depth) continue;
      auto left_path = path;
      left_path.push_back(PathStep::L);
      next.emplace_back(std::move(left_path), node.left());
      path.push_back(PathStep::R);
      next.emplace_back(std::move(path), node.right());
    }
    frontier = std::move(next);
  }
  report.root_v_epichristoffel = report.nodes.front().v_epichristoffel;
  if (!report.root_v_epichristoffel) {
    auto node = root;
    for (std::size_t d = 0; d <= depth; ++d) {
      report.right_diagonal.push_back({node, epi_factorizations(node.word())});
      node = node.right();
    }
  }
  return report;
}

FactorizabilityReport classify_factorizability(const OccurrenceTuple& root_tuple, std::size_t depth) {
  return classify_factorizability(epichristoffel_root(root_tuple).node, depth);
}

}  // namespace epiword
