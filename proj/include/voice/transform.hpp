#pragma once

#include <string>
#include <vector>

#include "voice/tree.hpp"

namespace voice {

/// Moves a noun phrase into `target` role. Full noun phrases pass through
/// unchanged (embedded PPs included); pronouns are re-validated against
/// the lexicon and keep their canonical entry, whose surface case the
/// realizer picks by slot.
inline NounPhrase swap_role(const NounPhrase& np, Role /*target*/,
                            const Lexicon& lex) {
  if (!np.is_pronoun()) return np;
  const PronounEntry* entry =
      lex.find_pronoun(np.pronoun->subject_form, Role::Subject);
  if (!entry) throw UnknownWordError(np.pronoun->subject_form);
  NounPhrase out = np;
  out.pronoun = *entry;
  return out;
}

namespace detail {

inline const VerbEntry* resolve_active_verb(const ActiveTree& tree, Tense t,
                                            const Lexicon& lex) {
  const VerbForm need =
      tree.modal ? VerbForm::Base
                 : active_verb_form(t, agreement_of(tree.subject, lex),
                                    tree.polarity);
  for (const Lexicon::VerbReading& r : lex.verb_readings(tree.verb))
    if (r.form == need) return r.entry;
  return nullptr;
}

}  // namespace detail

/// Active -> passive at the representation level: arguments swap, the verb
/// becomes its past participle, and the auxiliaries are rebuilt against the
/// new subject's agreement. Group-1 negatives drop their do-support
/// auxiliary; polarity, modal, and the final PP carry over.
inline PassiveTree passivize(const ActiveTree& tree, Tense t,
                             const Lexicon& lex) {
  const VerbEntry* entry = detail::resolve_active_verb(tree, t, lex);
  if (!entry) throw UnknownWordError(tree.verb);
  PassiveTree out;
  out.subject = swap_role(tree.object, Role::Subject, lex);
  out.agent = swap_role(tree.subject, Role::Object, lex);
  out.polarity = tree.polarity;
  out.final_pp = tree.final_pp;
  out.verb = entry->past_participle;
  const Agreement agr = agreement_of(out.subject, lex);
  if (tree.modal) {
    out.modal = tree.modal;
    out.aux_tense = "be";
  } else if (tense_group(t) == 1) {
    out.aux = {finite_passive_aux(t, agr)};
  } else {
    out.aux = aux_chain(t, agr);
    out.aux_tense = aux_tense_token(t);
  }
  return out;
}

/// Passive -> active, the exact inverse. A participle shared by several
/// verb entries yields one candidate tree per entry.
inline std::vector<ActiveTree> activize(const PassiveTree& tree, Tense t,
                                        const Lexicon& lex) {
  const std::vector<const VerbEntry*> candidates =
      lex.verbs_with_form(tree.verb, VerbForm::PastParticiple);
  if (candidates.empty()) throw UnknownWordError(tree.verb);
  const NounPhrase subject = swap_role(tree.agent, Role::Subject, lex);
  const NounPhrase object = swap_role(tree.subject, Role::Object, lex);
  const Agreement agr = agreement_of(subject, lex);
  std::vector<ActiveTree> out;
  for (const VerbEntry* entry : candidates) {
    ActiveTree active;
    active.subject = subject;
    active.object = object;
    active.modal = tree.modal;
    active.polarity = tree.polarity;
    active.final_pp = tree.final_pp;
    if (tree.modal) {
      active.verb = entry->base;
    } else if (tense_group(t) == 1 && tree.polarity == Polarity::Negative) {
      active.aux = {do_support_aux(t, agr)};
      active.verb = entry->base;
    } else {
      active.aux = aux_chain(t, agr);
      active.verb = inflect(*entry, active_verb_form(t, agr, tree.polarity));
    }
    out.push_back(std::move(active));
  }
  return out;
}

}  // namespace voice
