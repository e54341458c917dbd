#ifndef EPIWORD_FORMAT_HPP
#define EPIWORD_FORMAT_HPP

#include <string>
#include <string_view>

#include "epiword/alphabet.hpp"
#include "epiword/trees.hpp"

namespace epiword {

enum class OutputFormat { Text, Json, Dot };

OutputFormat parse_output_format(std::string_view name);

// Word trees. JSON nodes are {"u", "v", "tuple", "children"}.
std::string to_text(const Tree& tree, const Alphabet& alphabet);
std::string to_json(const Tree& tree, const Alphabet& alphabet);
std::string to_dot(const Tree& tree, const Alphabet& alphabet);
/// Inverse of to_json; the "tuple" field is checked against parikh(uv).
Tree tree_from_json(std::string_view json, const Alphabet& alphabet);

// Stern-Brocot trees. JSON nodes are {"value": "1/2"} or {"tuple": [..]}
// plus "children".
std::string to_text(const ValueTree<Fraction>& tree);
std::string to_text(const ValueTree<OccurrenceTuple>& tree);
std::string to_json(const ValueTree<Fraction>& tree);
std::string to_json(const ValueTree<OccurrenceTuple>& tree);
std::string to_dot(const ValueTree<Fraction>& tree);
std::string to_dot(const ValueTree<OccurrenceTuple>& tree);

}  // namespace epiword

#endif  // EPIWORD_FORMAT_HPP
