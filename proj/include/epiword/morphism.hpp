#ifndef EPIWORD_MORPHISM_HPP
#define EPIWORD_MORPHISM_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epiword/alphabet.hpp"

namespace epiword {

/// One generator of the episturmian monoid:
///   Psi(a):      a -> a, c -> ac
///   PsiBar(a):   a -> a, c -> ca
///   Theta(a, b): exchanges a and b
struct MorphismAtom {
  enum class Kind { Psi, PsiBar, Theta };

  Kind kind = Kind::Psi;
  Letter first = 0;
  Letter second = 0;  // Theta only

  static MorphismAtom psi(Letter a) { return {Kind::Psi, a, 0}; }
  static MorphismAtom psi_bar(Letter a) { return {Kind::PsiBar, a, 0}; }
  /// Throws InvalidArgument when a == b.
  static MorphismAtom theta(Letter a, Letter b);

  friend bool operator==(const MorphismAtom&, const MorphismAtom&) = default;
};

/// Composition phi_1 phi_2 ... phi_l, stored left to right; the rightmost
/// atom is applied first. Empty means identity.
using MorphismSeq = std::vector<MorphismAtom>;

Word apply_atom(const MorphismAtom& m, const Word& w);
Word apply(std::span<const MorphismAtom> seq, const Word& w);

/// True iff every atom is a Psi.
bool is_pure_standard(std::span<const MorphismAtom> seq);

/// "psi_y psi_z psi_y", "psibar_x", "theta_xy"; the identity renders as "id".
std::string format_morphisms(std::span<const MorphismAtom> seq, const Alphabet& alphabet);
MorphismSeq parse_morphisms(std::string_view text, const Alphabet& alphabet);

}  // namespace epiword

#endif  // EPIWORD_MORPHISM_HPP
