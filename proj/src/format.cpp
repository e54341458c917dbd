#include "epiword/format.hpp"

#include <json.hpp>

#include "epiword/error.hpp"

namespace epiword {

using nlohmann::json;

namespace {

std::string node_label(const TreeNode& node, const Alphabet& alphabet) {
  return "(" + alphabet.render(node.u) + ", " + alphabet.render(node.v) + ")";
}

void text_lines(const Tree& tree, const Alphabet& alphabet, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += node_label(tree.node, alphabet);
  out += "  ";
  out += tree.node.tuple().to_paren_string();
  out += '\n';
  for (const auto& child : tree.children) text_lines(child, alphabet, depth + 1, out);
}

json node_json(const Tree& tree, const Alphabet& alphabet) {
  json children = json::array();
  for (const auto& child : tree.children) children.push_back(node_json(child, alphabet));
  return {{"u", alphabet.render(tree.node.u)},
          {"v", alphabet.render(tree.node.v)},
          {"tuple", tree.node.tuple().counts()},
          {"children", std::move(children)}};
}

Tree node_from_json(const json& j, const Alphabet& alphabet) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v") || !j.contains("tuple") || !j.contains("children")) {
    throw Error(ErrorKind::Parse, "tree node must have u, v, tuple and children");
  }
  Tree tree;
  tree.node.u = alphabet.parse_word(j.at("u").get<std::string>());
  tree.node.v = alphabet.parse_word(j.at("v").get<std::string>());
  const OccurrenceTuple tuple(j.at("tuple").get<std::vector<std::int64_t>>());
  if (tuple != tree.node.tuple()) {
    throw Error(ErrorKind::Parse, "tuple " + tuple.to_paren_string() + " does not match the node's words");
  }
  for (const auto& child : j.at("children")) tree.children.push_back(node_from_json(child, alphabet));
  if (!tree.children.empty() && tree.children.size() != 2) {
    throw Error(ErrorKind::Parse, "tree nodes have zero or two children");
  }
  return tree;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Shared DOT walk: `label` renders one node.
template <class Node, class Label>
void dot_nodes(const Node& node, const Label& label, std::size_t& next_id, std::string& out) {
  const auto id = next_id++;
  out += "  n" + std::to_string(id) + " [label=\"" + dot_escape(label(node)) + "\"];\n";
  for (std::size_t c = 0; c < node.children.size(); ++c) {
    const auto child_id = next_id;
    dot_nodes(node.children[c], label, next_id, out);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(child_id) + " [label=\"" +
           (c == 0 ? "L" : "R") + "\"];\n";
  }
}

template <class Node, class Label>
std::string dot_graph(const Node& root, const Label& label) {
  std::string out = "digraph tree {\n  node [shape=box, fontname=\"monospace\"];\n";
  std::size_t next_id = 0;
  dot_nodes(root, label, next_id, out);
  out += "}\n";
  return out;
}

template <class T>
void value_text(const ValueTree<T>& tree, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += value_to_string(tree.value);
  out += '\n';
  for (const auto& child : tree.children) value_text(child, depth + 1, out);
}

json value_json(const Fraction& f) { return {{"value", f.to_string()}}; }
json value_json(const OccurrenceTuple& t) { return {{"tuple", t.counts()}}; }

template <class T>
json value_tree_json(const ValueTree<T>& tree) {
  auto j = value_json(tree.value);
  json children = json::array();
  for (const auto& child : tree.children) children.push_back(value_tree_json(child));
  j["children"] = std::move(children);
  return j;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "dot") return OutputFormat::Dot;
  throw Error(ErrorKind::Parse, "unknown format \"" + std::string(name) + "\" (text, json, dot)");
}

std::string to_text(const Tree& tree, const Alphabet& alphabet) {
  std::string out;
  text_lines(tree, alphabet, 0, out);
  return out;
}

std::string to_json(const Tree& tree, const Alphabet& alphabet) { return node_json(tree, alphabet).dump(2) + "\n"; }

std::string to_dot(const Tree& tree, const Alphabet& alphabet) {
  return dot_graph(tree, [&](const Tree& t) { return node_label(t.node, alphabet); });
}

Tree tree_from_json(std::string_view text, const Alphabet& alphabet) {
  json j;
  try {
    j = json::parse(text);
    return node_from_json(j, alphabet);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed tree JSON: ") + e.what());
  }
}

std::string to_text(const ValueTree<Fraction>& tree) {
  std::string out;
  value_text(tree, 0, out);
  return out;
}

std::string to_text(const ValueTree<OccurrenceTuple>& tree) {
  std::string out;
  value_text(tree, 0, out);
  return out;
}

std::string to_json(const ValueTree<Fraction>& tree) { return value_tree_json(tree).dump(2) + "\n"; }
std::string to_json(const ValueTree<OccurrenceTuple>& tree) { return value_tree_json(tree).dump(2) + "\n"; }

std::string to_dot(const ValueTree<Fraction>& tree) {
  return dot_graph(tree, [](const ValueTree<Fraction>& t) { return t.value.to_string(); });
}

std::string to_dot(const ValueTree<OccurrenceTuple>& tree) {
  return dot_graph(tree, [](const ValueTree<OccurrenceTuple>& t) { return t.value.to_paren_string(); });
}

}  // namespace epiword
