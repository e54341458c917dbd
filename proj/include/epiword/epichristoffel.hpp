#ifndef EPIWORD_EPICHRISTOFFEL_HPP
#define EPIWORD_EPICHRISTOFFEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epiword/alphabet.hpp"
#include "epiword/morphism.hpp"
#include "epiword/words.hpp"

namespace epiword {

/// Which maximal entry T reduces when several entries tie for the maximum.
///
/// PreferPrevious keeps the letter chosen on the previous step while it is
/// still maximal and otherwise takes the largest index, giving
/// (1,4,2) ->y ->z ->y, (1,2,4) ->z ->y ->z and (3,2,1) ->x ->y ->y.
/// A tie only survives to a non-rejecting step when the tuple is e_a + e_b,
/// so the rule permutes the last two factors of the c-word and never affects
/// the verdict.
enum class TieBreak { PreferPrevious, Smallest, Largest };

struct TStep {
  OccurrenceTuple before;
  std::size_t index = 0;
  OccurrenceTuple after;
};

/// Result of iterating T on a tuple until it reaches a unit vector e_m
/// (admissible, terminal letter m) or provably never will.
struct TTrace {
  enum class Verdict { Admissible, Rejected };

  OccurrenceTuple start;
  std::vector<TStep> steps;
  Verdict verdict = Verdict::Rejected;
  std::optional<Letter> terminal;  // set iff admissible
  std::string reason;              // set iff rejected

  bool admissible() const noexcept { return verdict == Verdict::Admissible; }
  /// "(1,4,2) ->y (1,1,2) ->z (1,1,0) ->y (1,0,0)"
  std::string render(const Alphabet& alphabet) const;
};

/// One application of T: the chosen maximal entry p_i becomes
/// p_i - sum_{j != i} p_j. `previous` feeds TieBreak::PreferPrevious.
std::pair<OccurrenceTuple, std::size_t> t_operator(const OccurrenceTuple& p,
                                                   TieBreak tie = TieBreak::PreferPrevious,
                                                   std::optional<std::size_t> previous = std::nullopt);

/// Iterates T. Rejects on a negative entry or on c * e_m with c > 1, which T
/// fixes forever. Throws AllZero / InvalidArgument on bad input.
TTrace admissibility(const OccurrenceTuple& p, TieBreak tie = TieBreak::PreferPrevious);

struct ConstructionResult {
  TTrace trace;
  MorphismSeq morphisms;  // Psi atoms, one per T step, outermost first
  Letter terminal_letter = 0;
  Word c_word;            // apply(morphisms, terminal_letter)
  Word epi_word;          // least rotation of c_word
  std::size_t rotation_offset = 0;
};

/// Builds the c-epichristoffel and epichristoffel words of an admissible tuple.
/// Throws NotAdmissible, or Overflow when sum(p) exceeds kMaxWordLength.
ConstructionResult construct(const OccurrenceTuple& p, TieBreak tie = TieBreak::PreferPrevious);

/// The epichristoffel (Lyndon) word of an admissible tuple.
Word epichristoffel_word_of(const OccurrenceTuple& p);

struct CanonicalSplit {
  Word u;
  Word v;
  OccurrenceTuple u_tuple;
  OccurrenceTuple v_tuple;
};

/// For c_word = phi_1 ... phi_l(a_j) with phi_l = psi_{a_i}:
/// u = phi_1 ... phi_{l-1}(a_i), v = phi_1 ... phi_{l-1}(a_j).
/// Throws NotAdmissible, or TrivialTuple when l == 0.
CanonicalSplit canonical_split(const OccurrenceTuple& p, TieBreak tie = TieBreak::PreferPrevious);

bool is_epichristoffel_word(const Word& w);
bool is_c_epichristoffel(const Word& w);

/// Every split w = u v with both parts epichristoffel words, by split
/// position. Throws NotEpichristoffel unless w is one with |w| >= 2.
std::vector<std::pair<Word, Word>> epi_factorizations(const Word& w);

/// All admissible k-tuples summing to n in lexicographic order; with
/// `all_letters` every entry must be >= 1.
std::vector<OccurrenceTuple> tuples_of_length(std::int64_t n, std::size_t k, bool all_letters);

}  // namespace epiword

#endif  // EPIWORD_EPICHRISTOFFEL_HPP
