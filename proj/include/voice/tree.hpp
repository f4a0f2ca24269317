#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "voice/lexicon.hpp"
#include "voice/tense.hpp"

namespace voice {

struct PrepPhrase;

/// A noun phrase: either a pronoun (stored by its lexicon entry and
/// rendered in the case its slot demands) or determiner + adjectives +
/// noun, with an optional attached prepositional phrase. The determiner
/// is optional so bare noun phrases ("apples", "school") are expressible.
struct NounPhrase {
  std::optional<PronounEntry> pronoun;
  std::optional<std::string> determiner;
  std::vector<std::string> adjectives;
  std::string noun;
  std::vector<PrepPhrase> pp;  // empty or one element

  bool is_pronoun() const { return pronoun.has_value(); }

  static NounPhrase pro(PronounEntry entry);
  static NounPhrase full(std::optional<std::string> determiner,
                         std::vector<std::string> adjectives,
                         std::string noun);

  friend bool operator==(const NounPhrase&, const NounPhrase&);
};

struct PrepPhrase {
  std::string prep;
  NounPhrase object;
  bool operator==(const PrepPhrase&) const = default;
};

inline NounPhrase NounPhrase::pro(PronounEntry entry) {
  NounPhrase np;
  np.pronoun = std::move(entry);
  return np;
}

inline NounPhrase NounPhrase::full(std::optional<std::string> determiner,
                                   std::vector<std::string> adjectives,
                                   std::string noun) {
  NounPhrase np;
  np.determiner = std::move(determiner);
  np.adjectives = std::move(adjectives);
  np.noun = std::move(noun);
  return np;
}

inline bool operator==(const NounPhrase& a, const NounPhrase& b) {
  return a.pronoun == b.pronoun && a.determiner == b.determiner &&
         a.adjectives == b.adjectives && a.noun == b.noun && a.pp == b.pp;
}

/// Compact representation of an active sentence. The aux chain holds the
/// surface auxiliaries (group-1 negatives hold the do-support auxiliary);
/// a modal excludes auxiliaries and forces a base-form verb.
struct ActiveTree {
  NounPhrase subject;
  std::optional<std::string> modal;
  std::vector<std::string> aux;
  Polarity polarity = Polarity::Positive;
  std::string verb;  // surface form as parsed / realized
  NounPhrase object;
  std::optional<PrepPhrase> final_pp;
  bool operator==(const ActiveTree&) const = default;
};

inline constexpr std::string_view kAgentMarker = "by";

/// Compact representation of a passive sentence. Group 1 stores its single
/// finite auxiliary in `aux` and no tense marker; groups 2-4 store the
/// chain plus be/being/been in `aux_tense`; a modal stores "be" there.
struct PassiveTree {
  NounPhrase subject;
  std::optional<std::string> modal;
  std::vector<std::string> aux;
  Polarity polarity = Polarity::Positive;
  std::optional<std::string> aux_tense;
  std::string verb;  // past participle
  NounPhrase agent;
  std::optional<PrepPhrase> final_pp;
  bool operator==(const PassiveTree&) const = default;
};

/// One solution of the conversion relation.
struct ConversionResult {
  std::vector<std::string> active_tokens;
  std::string active_term;
  std::vector<std::string> passive_tokens;
  std::string passive_term;
  Tense tense = Tense::SimplePresent;
  bool operator==(const ConversionResult&) const = default;
};

/// Number/person of a noun phrase: the pronoun's stored agreement, or the
/// head noun's. Adjectives and embedded PPs never matter.
inline Agreement agreement_of(const NounPhrase& np, const Lexicon& lex) {
  if (np.is_pronoun()) return np.pronoun->agreement;
  std::optional<NounEntry> entry = lex.find_noun(np.noun);
  if (!entry) throw UnknownWordError(np.noun);
  return entry->agreement;
}

// ---------------------------------------------------------------------------
// Canonical term notation
// ---------------------------------------------------------------------------

std::string np_term(const NounPhrase& np, Role role);

inline std::string pp_term(const PrepPhrase& pp) {
  return "pp(pre(" + pp.prep + ")," + np_term(pp.object, Role::Object) + ")";
}

/// np(...) in term notation; pronouns surface in the case of `role`,
/// prepositional objects inside the phrase always in object case.
inline std::string np_term(const NounPhrase& np, Role role) {
  std::string out = "np(";
  if (np.is_pronoun()) {
    out += "pro(" + pronoun_form(*np.pronoun, role) + ")";
  } else {
    if (np.determiner) out += "det(" + *np.determiner + "),";
    if (!np.adjectives.empty()) {
      out += "adj([";
      for (std::size_t i = 0; i < np.adjectives.size(); ++i) {
        if (i) out += ',';
        out += np.adjectives[i];
      }
      out += "]),";
    }
    out += "n(" + np.noun + ")";
  }
  if (!np.pp.empty()) out += "," + pp_term(np.pp.front());
  out += ')';
  return out;
}

namespace detail {

inline void append_aux_terms(std::string& out,
                             const std::vector<std::string>& aux) {
  static constexpr std::string_view kFunctors[3] = {"aux", "aux1", "aux2"};
  for (std::size_t i = 0; i < aux.size() && i < 3; ++i) {
    out += ',';
    out += kFunctors[i];
    out += '(' + aux[i] + ')';
  }
}

}  // namespace detail

/// s(np,...,v,np[,pp]) with slots np, [modal], [aux aux1 aux2],
/// [pol(not)], v, np, [pp].
inline std::string to_term_string(const ActiveTree& tree) {
  std::string out = "s(" + np_term(tree.subject, Role::Subject);
  if (tree.modal) out += ",modal(" + *tree.modal + ")";
  detail::append_aux_terms(out, tree.aux);
  if (tree.polarity == Polarity::Negative) out += ",pol(not)";
  out += ",v(" + tree.verb + ")";
  out += "," + np_term(tree.object, Role::Object);
  if (tree.final_pp) out += "," + pp_term(*tree.final_pp);
  out += ')';
  return out;
}

/// Passive slots: np, [modal], [aux aux1 aux2], [pol(not)], [tense marker],
/// v, agent(by), np, [pp]. The marker of a modal sentence prints as
/// aux(be); the group 2-4 marker prints as auxTense(...).
inline std::string to_term_string(const PassiveTree& tree) {
  std::string out = "s(" + np_term(tree.subject, Role::Subject);
  if (tree.modal) out += ",modal(" + *tree.modal + ")";
  detail::append_aux_terms(out, tree.aux);
  if (tree.polarity == Polarity::Negative) out += ",pol(not)";
  if (tree.aux_tense) {
    if (tree.modal)
      out += ",aux(" + *tree.aux_tense + ")";
    else
      out += ",auxTense(" + *tree.aux_tense + ")";
  }
  out += ",v(" + tree.verb + ")";
  out += ",agent(by)," + np_term(tree.agent, Role::Object);
  if (tree.final_pp) out += "," + pp_term(*tree.final_pp);
  out += ')';
  return out;
}

}  // namespace voice
