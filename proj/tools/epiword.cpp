// epiword: command-line front end for the Christoffel / epichristoffel library.
//
// Exit codes: 0 success, 1 valid but negative answer (rejected tuple, no
// tuples of a length), 2 bad input or domain error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "epiword/christoffel.hpp"
#include "epiword/epichristoffel.hpp"
#include "epiword/error.hpp"
#include "epiword/format.hpp"
#include "epiword/morphism.hpp"
#include "epiword/trees.hpp"
#include "epiword/words.hpp"

namespace {

using namespace epiword;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::size_t max_tree_depth() {
  if (const char* env = std::getenv("EPIWORD_MAX_DEPTH")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, std::string("EPIWORD_MAX_DEPTH is not a number: ") + env);
    }
  }
  return 12;
}

Alphabet alphabet_for(const std::string& override_symbols, std::size_t k) {
  if (override_symbols.empty()) return Alphabet::standard(k);
  auto alphabet = Alphabet::parse(override_symbols);
  if (alphabet.size() != k) {
    throw Error(ErrorKind::InvalidAlphabet, "alphabet \"" + override_symbols + "\" has " +
                                                std::to_string(alphabet.size()) + " symbols, expected " +
                                                std::to_string(k));
  }
  return alphabet;
}

/// Smallest of "xy" / "xyz" covering the text unless overridden.
Alphabet alphabet_for_word(const std::string& override_symbols, const std::string& text) {
  if (!override_symbols.empty()) return Alphabet::parse(override_symbols);
  if (text.find_first_not_of("xy") == std::string::npos) return Alphabet::standard(2);
  if (text.find_first_not_of("xyz") == std::string::npos) return Alphabet::standard(3);
  throw Error(ErrorKind::InvalidAlphabet, "word uses symbols outside \"xyz\"; pass --alphabet");
}

TieBreak parse_tie(const std::string& name) {
  if (name == "prefer-previous") return TieBreak::PreferPrevious;
  if (name == "smallest") return TieBreak::Smallest;
  if (name == "largest") return TieBreak::Largest;
  throw Error(ErrorKind::Parse, "unknown tie-break \"" + name + "\"");
}

std::string pair_text(const Alphabet& alphabet, const Word& u, const Word& v) {
  return "(" + alphabet.render(u) + ", " + alphabet.render(v) + ")";
}

// --- christoffel ------------------------------------------------------------

struct ChristoffelArgs {
  std::int64_t rise = 0;
  std::int64_t run = 0;
  bool factorize = false;
  bool labels = false;
  bool draw = false;
  std::string format = "text";
};

int run_christoffel(const ChristoffelArgs& args) {
  const Slope slope(args.rise, args.run);
  const auto alphabet = Alphabet::standard(2);
  const auto word = christoffel_word(slope);
  const auto format = parse_output_format(args.format);
  if (format == OutputFormat::Dot) throw Error(ErrorKind::InvalidArgument, "dot output is only for trees");

  if (format == OutputFormat::Json) {
    nlohmann::json j{{"slope", std::to_string(args.rise) + "/" + std::to_string(args.run)},
                     {"word", alphabet.render(word)}};
    if (args.factorize) {
      const auto [w1, w2] = standard_factorization(slope);
      j["factorization"] = {alphabet.render(w1), alphabet.render(w2)};
    }
    if (args.labels) {
      auto labels = nlohmann::json::array();
      for (const auto& label : path_labels(slope)) {
        labels.push_back({{"point", {label.i, label.j}}, {"label", label.to_string()}});
      }
      j["labels"] = std::move(labels);
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  if (!args.factorize && !args.labels) std::cout << alphabet.render(word) << '\n';
  if (args.factorize) {
    const auto [w1, w2] = standard_factorization(slope);
    std::cout << pair_text(alphabet, w1, w2) << '\n';
  }
  if (args.labels) {
    std::string line;
    for (const auto& label : path_labels(slope)) {
      if (!line.empty()) line += ' ';
      line += label.to_string();
    }
    std::cout << line << '\n';
  }
  if (args.draw) std::cout << render_lattice(slope);
  return kExitOk;
}

// --- tuple ------------------------------------------------------------------

struct TupleArgs {
  std::string tuple;
  bool trace = false;
  bool word = false;
  bool split = false;
  std::string alphabet;
  std::string tie = "prefer-previous";
};

int run_tuple(const TupleArgs& args) {
  const auto p = OccurrenceTuple::parse(args.tuple);
  const auto alphabet = alphabet_for(args.alphabet, p.size());
  const auto tie = parse_tie(args.tie);
  const auto trace = admissibility(p, tie);

  if (!args.trace && !args.word && !args.split) {
    if (trace.admissible()) {
      std::cout << "admissible (terminal " << alphabet.symbol(*trace.terminal) << ")\n";
      return kExitOk;
    }
    std::cout << "rejected\n";
    return kExitNegative;
  }
  if (args.trace) {
    std::cout << trace.render(alphabet) << '\n';
    if (!trace.admissible()) std::cout << "rejected: " << trace.reason << '\n';
  }
  if (args.word) {
    const auto built = construct(p, tie);
    std::cout << "c: " << alphabet.render(built.c_word) << " / epi: " << alphabet.render(built.epi_word) << '\n';
  }
  if (args.split) {
    const auto split = canonical_split(p, tie);
    std::cout << pair_text(alphabet, split.u, split.v) << '\n';
  }
  return trace.admissible() ? kExitOk : kExitNegative;
}

// --- tree -------------------------------------------------------------------

struct TreeArgs {
  std::string kind;
  std::string root;
  std::size_t depth = 2;
  std::string format = "text";
  std::string alphabet;
};

int run_tree(const TreeArgs& args) {
  const auto cap = max_tree_depth();
  if (args.depth > cap) {
    throw Error(ErrorKind::Overflow, "depth " + std::to_string(args.depth) + " exceeds EPIWORD_MAX_DEPTH=" +
                                         std::to_string(cap));
  }
  const auto format = parse_output_format(args.format);
  auto emit = [&](const auto& text, const auto& json, const auto& dot) {
    std::cout << (format == OutputFormat::Text ? text() : format == OutputFormat::Json ? json() : dot());
  };

  if (args.kind == "christoffel") {
    const auto alphabet = alphabet_for(args.alphabet, 2);
    const auto tree = christoffel_tree(args.depth);
    emit([&] { return to_text(tree, alphabet); }, [&] { return to_json(tree, alphabet); },
         [&] { return to_dot(tree, alphabet); });
    return kExitOk;
  }
  if (args.kind == "epi") {
    if (args.root.empty()) throw Error(ErrorKind::InvalidArgument, "tree epi requires --root");
    const auto p = OccurrenceTuple::parse(args.root);
    const auto alphabet = alphabet_for(args.alphabet, p.size());
    const auto tree = epichristoffel_tree(p, args.depth);
    emit([&] { return to_text(tree, alphabet); }, [&] { return to_json(tree, alphabet); },
         [&] { return to_dot(tree, alphabet); });
    return kExitOk;
  }
  if (args.kind == "sb") {
    if (args.root.empty()) {
      const auto tree = stern_brocot_tree(kSternBrocotLow, kSternBrocotHigh, args.depth);
      emit([&] { return to_text(tree); }, [&] { return to_json(tree); }, [&] { return to_dot(tree); });
      return kExitOk;
    }
    const auto root = epichristoffel_root(OccurrenceTuple::parse(args.root));
    const auto tree = stern_brocot_tree(root.u_tuple, root.v_tuple, args.depth);
    emit([&] { return to_text(tree); }, [&] { return to_json(tree); }, [&] { return to_dot(tree); });
    return kExitOk;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown tree kind \"" + args.kind + "\" (christoffel, epi, sb)");
}

// --- find -------------------------------------------------------------------

struct FindArgs {
  std::string root;
  std::string target;
  std::string alphabet;
};

int run_find(const FindArgs& args) {
  const auto p0 = OccurrenceTuple::parse(args.root);
  const auto target = OccurrenceTuple::parse(args.target);
  const auto alphabet = alphabet_for(args.alphabet, p0.size());
  const auto root = epichristoffel_root(p0);
  const auto path = path_to_tuple(root, target);
  std::cout << format_path(path) << '\n' << alphabet.render(resolve_epichristoffel(p0, target)) << '\n';
  return kExitOk;
}

// --- exists -----------------------------------------------------------------

struct ExistsArgs {
  std::int64_t length = 0;
  std::size_t k = 3;
  bool all_letters = false;
  std::optional<std::size_t> max;
};

int run_exists(const ExistsArgs& args) {
  const auto tuples = tuples_of_length(args.length, args.k, args.all_letters);
  const auto limit = args.max.value_or(tuples.size());
  for (std::size_t i = 0; i < tuples.size() && i < limit; ++i) std::cout << tuples[i].to_string() << '\n';
  return tuples.empty() ? kExitNegative : kExitOk;
}

// --- word -------------------------------------------------------------------

struct WordArgs {
  std::string word;
  std::string alphabet;
};

int run_word(const WordArgs& args) {
  const auto alphabet = alphabet_for_word(args.alphabet, args.word);
  const auto w = alphabet.parse_word(args.word);
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "word must be non-empty");
  const auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  const auto least = least_rotation(w);
  std::cout << "parikh: " << parikh(w).to_string() << '\n'
            << "least rotation: " << alphabet.render(least.word) << " (offset " << least.offset << ")\n"
            << "primitive: " << yes_no(is_primitive(w)) << '\n'
            << "lyndon: " << yes_no(is_lyndon(w)) << '\n'
            << "balanced: " << yes_no(is_balanced(w)) << '\n';
  if (w.arity() == 2) std::cout << "christoffel: " << yes_no(is_christoffel(w)) << '\n';
  const bool epi = is_epichristoffel_word(w);
  std::cout << "epichristoffel: " << yes_no(epi) << '\n'
            << "c-epichristoffel: " << yes_no(is_c_epichristoffel(w)) << '\n';
  if (epi && w.size() >= 2) {
    const auto splits = epi_factorizations(w);
    std::cout << "epichristoffel factorizations: " << splits.size() << '\n';
    for (const auto& [u, v] : splits) std::cout << "  " << pair_text(alphabet, u, v) << '\n';
  }
  return kExitOk;
}

// --- apply ------------------------------------------------------------------

struct ApplyArgs {
  std::string morphisms;
  std::string word;
  std::string alphabet;
};

int run_apply(const ApplyArgs& args) {
  const auto alphabet = args.alphabet.empty() ? Alphabet::standard(3) : Alphabet::parse(args.alphabet);
  const auto seq = parse_morphisms(args.morphisms, alphabet);
  std::cout << alphabet.render(epiword::apply(seq, alphabet.parse_word(args.word))) << '\n';
  return kExitOk;
}

// --- diagonal ---------------------------------------------------------------

struct DiagonalArgs {
  std::string side = "L";
  std::size_t k = 1;
  std::size_t terms = 5;
  std::string root;
};

int run_diagonal(const DiagonalArgs& args) {
  if (args.side != "L" && args.side != "R") throw Error(ErrorKind::InvalidArgument, "--side must be L or R");
  const auto side = args.side == "L" ? Side::Left : Side::Right;
  if (args.root.empty()) {
    for (const auto& f : Diagonal<Fraction>(kSternBrocotLow, kSternBrocotHigh, side, args.k).take(args.terms)) {
      std::cout << f.to_string() << '\n';
    }
    return kExitOk;
  }
  const auto root = epichristoffel_root(OccurrenceTuple::parse(args.root));
  for (const auto& t : Diagonal<OccurrenceTuple>(root.u_tuple, root.v_tuple, side, args.k).take(args.terms)) {
    std::cout << t.to_string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Christoffel and epichristoffel words, morphisms and trees"};
  app.require_subcommand(1);
  int status = kExitOk;

  ChristoffelArgs christoffel;
  auto* christoffel_cmd = app.add_subcommand("christoffel", "Christoffel word of slope a/b");
  christoffel_cmd->add_option("a", christoffel.rise, "vertical steps (y)")->required();
  christoffel_cmd->add_option("b", christoffel.run, "horizontal steps (x)")->required();
  christoffel_cmd->add_flag("--factorize", christoffel.factorize, "print the standard factorization");
  christoffel_cmd->add_flag("--labels", christoffel.labels, "print the point labels");
  christoffel_cmd->add_flag("--draw", christoffel.draw, "draw the lattice path");
  christoffel_cmd->add_option("--format", christoffel.format, "text or json");
  christoffel_cmd->callback([&] { status = run_christoffel(christoffel); });

  TupleArgs tuple;
  auto* tuple_cmd = app.add_subcommand("tuple", "admissibility of an occurrence tuple");
  tuple_cmd->add_option("tuple", tuple.tuple, "comma-separated counts, e.g. 1,4,2")->required();
  tuple_cmd->add_flag("--trace", tuple.trace, "print the T iteration");
  tuple_cmd->add_flag("--word", tuple.word, "print the c-epichristoffel and epichristoffel words");
  tuple_cmd->add_flag("--split", tuple.split, "print the canonical split (u, v)");
  tuple_cmd->add_option("--alphabet", tuple.alphabet, "ordered symbols");
  tuple_cmd->add_option("--tie", tuple.tie, "prefer-previous, smallest or largest");
  tuple_cmd->callback([&] { status = run_tuple(tuple); });

  TreeArgs tree;
  auto* tree_cmd = app.add_subcommand("tree", "Christoffel, epichristoffel or Stern-Brocot tree");
  tree_cmd->add_option("kind", tree.kind, "christoffel, epi or sb")->required();
  tree_cmd->add_option("--root", tree.root, "root tuple (epi, tuple sb)");
  tree_cmd->add_option("--depth", tree.depth, "levels below the root");
  tree_cmd->add_option("--format", tree.format, "text, json or dot");
  tree_cmd->add_option("--alphabet", tree.alphabet, "ordered symbols");
  tree_cmd->callback([&] { status = run_tree(tree); });

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "locate a tuple in an epichristoffel tree");
  find_cmd->add_option("--root", find.root, "root tuple")->required();
  find_cmd->add_option("--target", find.target, "target tuple")->required();
  find_cmd->add_option("--alphabet", find.alphabet, "ordered symbols");
  find_cmd->callback([&] { status = run_find(find); });

  ExistsArgs exists;
  auto* exists_cmd = app.add_subcommand("exists", "admissible tuples of a given length");
  exists_cmd->add_option("--length", exists.length, "word length n")->required();
  exists_cmd->add_option("--k", exists.k, "alphabet size");
  exists_cmd->add_flag("--all-letters", exists.all_letters, "every letter occurs");
  exists_cmd->add_option("--max", exists.max, "print at most this many tuples");
  exists_cmd->callback([&] { status = run_exists(exists); });

  WordArgs word;
  auto* word_cmd = app.add_subcommand("word", "properties of a word");
  word_cmd->add_option("word", word.word, "the word")->required();
  word_cmd->add_option("--alphabet", word.alphabet, "ordered symbols");
  word_cmd->callback([&] { status = run_word(word); });

  ApplyArgs apply_args;
  auto* apply_cmd = app.add_subcommand("apply", "apply an episturmian morphism sequence");
  apply_cmd->add_option("morphisms", apply_args.morphisms, "e.g. \"psi_y psi_z psi_y\"")->required();
  apply_cmd->add_option("word", apply_args.word, "argument word")->required();
  apply_cmd->add_option("--alphabet", apply_args.alphabet, "ordered symbols");
  apply_cmd->callback([&] { status = run_apply(apply_args); });

  DiagonalArgs diagonal;
  auto* diagonal_cmd = app.add_subcommand("diagonal", "left or right diagonal of a Stern-Brocot tree");
  diagonal_cmd->add_option("--side", diagonal.side, "L or R");
  diagonal_cmd->add_option("--k", diagonal.k, "diagonal index");
  diagonal_cmd->add_option("--terms", diagonal.terms, "number of entries");
  diagonal_cmd->add_option("--root", diagonal.root, "root tuple of an epichristoffel tree");
  diagonal_cmd->callback([&] { status = run_diagonal(diagonal); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return status;
}
