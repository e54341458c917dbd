#include "epiword/morphism.hpp"

#include <algorithm>
#include <sstream>

#include "epiword/error.hpp"

namespace epiword {

MorphismAtom MorphismAtom::theta(Letter a, Letter b) {
  if (a == b) throw Error(ErrorKind::InvalidArgument, "theta needs two distinct letters");
  return {Kind::Theta, a, b};
}

Word apply_atom(const MorphismAtom& m, const Word& w) {
  const auto k = w.arity();
  if (m.first >= k || (m.kind == MorphismAtom::Kind::Theta && m.second >= k)) {
    throw Error(ErrorKind::InvalidLetter, "morphism letter outside the word's alphabet");
  }
  std::vector<Letter> out;
  if (m.kind == MorphismAtom::Kind::Theta) {
    out.reserve(w.size());
    for (Letter c : w) out.push_back(c == m.first ? m.second : c == m.second ? m.first : c);
    return Word(k, std::move(out));
  }
  const auto hits = static_cast<std::size_t>(std::count(w.begin(), w.end(), m.first));
  out.reserve(checked_length(w.size(), w.size() - hits));
  const bool prepend = m.kind == MorphismAtom::Kind::Psi;
  for (Letter c : w) {
    if (c == m.first) {
      out.push_back(c);
    } else if (prepend) {
      out.push_back(m.first);
      out.push_back(c);
    } else {
      out.push_back(c);
      out.push_back(m.first);
    }
  }
  return Word(k, std::move(out));
}

Word apply(std::span<const MorphismAtom> seq, const Word& w) {
  Word out = w;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out = apply_atom(*it, out);
  return out;
}

bool is_pure_standard(std::span<const MorphismAtom> seq) {
  return std::all_of(seq.begin(), seq.end(),
                     [](const MorphismAtom& m) { return m.kind == MorphismAtom::Kind::Psi; });
}

std::string format_morphisms(std::span<const MorphismAtom> seq, const Alphabet& alphabet) {
  if (seq.empty()) return "id";
  std::string out;
  for (const auto& m : seq) {
    if (!out.empty()) out += ' ';
    switch (m.kind) {
      case MorphismAtom::Kind::Psi: out += "psi_"; break;
      case MorphismAtom::Kind::PsiBar: out += "psibar_"; break;
      case MorphismAtom::Kind::Theta: out += "theta_"; break;
    }
    out += alphabet.symbol(m.first);
    if (m.kind == MorphismAtom::Kind::Theta) out += alphabet.symbol(m.second);
  }
  return out;
}

MorphismSeq parse_morphisms(std::string_view text, const Alphabet& alphabet) {
  MorphismSeq seq;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "id") continue;
    const auto bar = token.find('_');
    if (bar == std::string::npos) throw Error(ErrorKind::Parse, "bad morphism token \"" + token + "\"");
    const auto name = token.substr(0, bar);
    const auto letters = token.substr(bar + 1);
    if ((name == "psi" || name == "psibar") && letters.size() == 1) {
      const auto a = alphabet.index_of(letters[0]);
      seq.push_back(name == "psi" ? MorphismAtom::psi(a) : MorphismAtom::psi_bar(a));
    } else if (name == "theta" && letters.size() == 2) {
      seq.push_back(MorphismAtom::theta(alphabet.index_of(letters[0]), alphabet.index_of(letters[1])));
    } else {
      throw Error(ErrorKind::Parse, "bad morphism token \"" + token + "\"");
    }
  }
  return seq;
}

}  // namespace epiword
