#include "epiword/epichristoffel.hpp"

#include <algorithm>

#include "epiword/error.hpp"

namespace epiword {

namespace {

std::optional<std::size_t> single_support(const OccurrenceTuple& p) {
  std::optional<std::size_t> m;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (m) return std::nullopt;
    m = i;
  }
  return m;
}

void validate_input(const OccurrenceTuple& p) {
  if (p.size() == 0) throw Error(ErrorKind::InvalidArgument, "tuple must have at least one entry");
  if (p.any_negative()) throw Error(ErrorKind::InvalidArgument, "tuple entries must be non-negative");
  if (p.all_zero()) throw Error(ErrorKind::AllZero, "tuple " + p.to_paren_string() + " is all zero");
}

}  // namespace

std::string TTrace::render(const Alphabet& alphabet) const {
  std::string out = start.to_paren_string();
  for (const auto& step : steps) {
    out += " ->";
    out += alphabet.symbol(static_cast<Letter>(step.index));
    out += ' ';
    out += step.after.to_paren_string();
  }
  return out;
}

std::pair<OccurrenceTuple, std::size_t> t_operator(const OccurrenceTuple& p, TieBreak tie,
                                                   std::optional<std::size_t> previous) {
  if (p.size() < 2) throw Error(ErrorKind::InvalidArgument, "T needs a tuple with k >= 2");
  if (p.all_zero()) throw Error(ErrorKind::AllZero, "T is undefined on the zero tuple");

  const auto max_value = *std::max_element(p.counts().begin(), p.counts().end());
  std::size_t chosen = 0;
  switch (tie) {
    case TieBreak::Smallest:
      while (p[chosen] != max_value) ++chosen;
      break;
    case TieBreak::PreferPrevious:
      if (previous && *previous < p.size() && p[*previous] == max_value) {
        chosen = *previous;
        break;
      }
      [[fallthrough]];
    case TieBreak::Largest:
      chosen = p.size() - 1;
      while (p[chosen] != max_value) --chosen;
      break;
  }

  std::int64_t others = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j != chosen) others = checked_add(others, p[j]);
  }
  auto next = p;
  next[chosen] = checked_add(p[chosen], -others);
  return {std::move(next), chosen};
}

TTrace admissibility(const OccurrenceTuple& p, TieBreak tie) {
  validate_input(p);
  TTrace trace;
  trace.start = p;
  // sum(T(q)) = max(q) < sum(q) while two entries are positive, so the loop
  // runs at most sum(p) times.
  const auto budget = p.sum();
  auto current = p;
  std::optional<std::size_t> previous;
  for (std::int64_t step = 0;; ++step) {
    if (const auto m = current.unit_index()) {
      trace.verdict = TTrace::Verdict::Admissible;
      trace.terminal = static_cast<Letter>(*m);
      return trace;
    }
    if (current.any_negative()) {
      trace.reason = "negative entry in " + current.to_paren_string();
      return trace;
    }
    if (single_support(current)) {
      trace.reason = current.to_paren_string() + " is a fixed point of T";
      return trace;
    }
    if (step > budget) {
      throw Error(ErrorKind::InvalidArgument, "T iteration failed to terminate on " + p.to_paren_string());
    }
    auto [next, index] = t_operator(current, tie, previous);
    trace.steps.push_back({current, index, next});
    previous = index;
    current = std::move(next);
  }
}

ConstructionResult construct(const OccurrenceTuple& p, TieBreak tie) {
  ConstructionResult result;
  result.trace = admissibility(p, tie);
  if (!result.trace.admissible()) {
    throw Error(ErrorKind::NotAdmissible, p.to_paren_string() + " is not admissible: " + result.trace.reason);
  }
  if (static_cast<std::uint64_t>(p.sum()) > kMaxWordLength) {
    throw Error(ErrorKind::Overflow, "word for " + p.to_paren_string() + " exceeds the length budget");
  }
  result.morphisms.reserve(result.trace.steps.size());
  for (const auto& step : result.trace.steps) {
    result.morphisms.push_back(MorphismAtom::psi(static_cast<Letter>(step.index)));
  }
  result.terminal_letter = *result.trace.terminal;
  result.c_word = epiword::apply(result.morphisms, Word::letter(p.size(), result.terminal_letter));
  auto least = least_rotation(result.c_word);
  result.epi_word = std::move(least.word);
  result.rotation_offset = least.offset;
  return result;
}

Word epichristoffel_word_of(const OccurrenceTuple& p) { return construct(p).epi_word; }

CanonicalSplit canonical_split(const OccurrenceTuple& p, TieBreak tie) {
  const auto built = construct(p, tie);
  const auto l = built.morphisms.size();
  if (l == 0) {
    throw Error(ErrorKind::TrivialTuple, p.to_paren_string() + " is a unit vector and has no split");
  }
  const auto prefix = std::span<const MorphismAtom>(built.morphisms).first(l - 1);
  CanonicalSplit split;
  split.u = epiword::apply(prefix, Word::letter(p.size(), built.morphisms.back().first));
  split.v = epiword::apply(prefix, Word::letter(p.size(), built.terminal_letter));
  split.u_tuple = parikh(split.u);
  split.v_tuple = parikh(split.v);
  return split;
}

bool is_epichristoffel_word(const Word& w) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "is_epichristoffel_word requires a non-empty word");
  const auto p = parikh(w);
  if (!admissibility(p).admissible()) return false;
  return construct(p).epi_word == w;
}

bool is_c_epichristoffel(const Word& w) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "is_c_epichristoffel requires a non-empty word");
  return is_epichristoffel_word(least_rotation(w).word);
}

std::vector<std::pair<Word, Word>> epi_factorizations(const Word& w) {
  if (w.size() < 2 || !is_epichristoffel_word(w)) {
    throw Error(ErrorKind::NotEpichristoffel, "epi_factorizations needs an epichristoffel word of length >= 2");
  }
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    auto u = w.substr(0, cut);
    auto v = w.substr(cut, w.size() - cut);
    if (is_epichristoffel_word(u) && is_epichristoffel_word(v)) out.emplace_back(std::move(u), std::move(v));
  }
  return out;
}

std::vector<OccurrenceTuple> tuples_of_length(std::int64_t n, std::size_t k, bool all_letters) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "tuple length must be >= 1");
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "alphabet size must be >= 2");
  std::vector<OccurrenceTuple> out;
  const std::int64_t floor = all_letters ? 1 : 0;
  std::vector<std::int64_t> counts(k, 0);
  // Depth-first over compositions; increasing entries at each position gives
  // lexicographic order.
  auto recurse = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
    if (pos + 1 == k) {
      if (remaining < floor) return;
      counts[pos] = remaining;
      OccurrenceTuple t(counts);
      if (admissibility(t).admissible()) out.push_back(std::move(t));
      return;
    }
    const auto reserve = floor * static_cast<std::int64_t>(k - pos - 1);
    for (std::int64_t c = floor; c + reserve <= remaining; ++c) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  recurse(recurse, 0, n);
  return out;
}

}  // namespace epiword
