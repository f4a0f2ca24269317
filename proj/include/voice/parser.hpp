#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "voice/tree.hpp"

namespace voice {

/// Lowercases, splits on whitespace, strips one trailing period.
inline std::vector<std::string> tokenize(std::string_view line) {
  std::string text = detail::to_lower(line);
  while (!text.empty() &&
         (text.back() == ' ' || text.back() == '\t' || text.back() == '\r' ||
          text.back() == '\n'))
    text.pop_back();
  if (!text.empty() && text.back() == '.') text.pop_back();
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

struct NpReading {
  NounPhrase np;
  Agreement agreement = Agreement::Singular;
  std::size_t next = 0;  // index of the first token after the phrase
};

struct PpReading {
  PrepPhrase pp;
  std::size_t next = 0;
};

std::vector<PpReading> parse_pp(std::span<const std::string> tokens,
                                std::size_t pos, const Lexicon& lex);

/// All noun-phrase readings starting at `pos`, longest consumption first:
/// pronoun (in the case form of `role`) or det? + adjectives + noun, each
/// optionally followed by one attached PP. Empty result means no NP here.
inline std::vector<NpReading> parse_np(std::span<const std::string> tokens,
                                       std::size_t pos, Role role,
                                       const Lexicon& lex) {
  std::vector<NpReading> out;
  if (pos >= tokens.size()) return out;

  std::vector<NpReading> heads;  // before PP attachment
  const std::string& first = tokens[pos];
  if (const PronounEntry* p = lex.find_pronoun(first, role))
    heads.push_back({NounPhrase::pro(*p), p->agreement, pos + 1});

  auto scan_body = [&](std::optional<std::string> det, std::size_t body) {
    std::vector<std::string> adjectives;
    for (std::size_t i = body; i < tokens.size(); ++i) {
      if (std::optional<NounEntry> n = lex.find_noun(tokens[i]))
        heads.push_back(
            {NounPhrase::full(det, adjectives, tokens[i]), n->agreement, i + 1});
      if (!lex.is_adjective(tokens[i])) break;
      adjectives.push_back(tokens[i]);
    }
  };
  if (lex.is_determiner(first)) scan_body(first, pos + 1);
  scan_body(std::nullopt, pos);

  for (NpReading& head : heads) {
    for (PpReading& attached : parse_pp(tokens, head.next, lex)) {
      NpReading with_pp = head;
      with_pp.np.pp = {std::move(attached.pp)};
      with_pp.next = attached.next;
      out.push_back(std::move(with_pp));
    }
    out.push_back(std::move(head));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const NpReading& a, const NpReading& b) {
                     return a.next > b.next;
                   });
  return out;
}

/// Prepositional-phrase readings at `pos`: preposition + object-case NP.
inline std::vector<PpReading> parse_pp(std::span<const std::string> tokens,
                                       std::size_t pos, const Lexicon& lex) {
  std::vector<PpReading> out;
  if (pos >= tokens.size() || !lex.is_preposition(tokens[pos])) return out;
  for (NpReading& np : parse_np(tokens, pos + 1, Role::Object, lex))
    out.push_back({PrepPhrase{tokens[pos], std::move(np.np)}, np.next});
  return out;
}

struct ActiveParse {
  ActiveTree tree;
  Tense tense = Tense::SimplePresent;
  Agreement subj_agr = Agreement::Singular;
  Agreement obj_agr = Agreement::Singular;
  bool operator==(const ActiveParse&) const = default;
};

struct PassiveParse {
  PassiveTree tree;
  Tense tense = Tense::SimplePresent;
  Agreement subj_agr = Agreement::Singular;   // of the passive subject
  Agreement agent_agr = Agreement::Singular;  // of the by-phrase
  bool operator==(const PassiveParse&) const = default;
};

namespace detail {

struct ComplexReading {
  std::optional<std::string> modal;
  std::vector<std::string> aux;
  std::optional<std::string> aux_tense;  // passive only
  std::string verb;
  std::size_t next = 0;
};

inline bool token_at(std::span<const std::string> tokens, std::size_t pos,
                     std::string_view expected) {
  return pos < tokens.size() && tokens[pos] == expected;
}

inline bool verb_form_at(std::span<const std::string> tokens, std::size_t pos,
                         VerbForm form, const Lexicon& lex) {
  if (pos >= tokens.size()) return false;
  for (const Lexicon::VerbReading& r : lex.verb_readings(tokens[pos]))
    if (r.form == form) return true;
  return false;
}

// aux chain (with "not" after the first auxiliary) + main verb of an
// active sentence for one tense/polarity/subject agreement.
inline bool match_active_complex(std::span<const std::string> tokens,
                                 std::size_t pos, Tense t, Polarity pol,
                                 Agreement agr, const Lexicon& lex,
                                 ComplexReading& out) {
  std::size_t p = pos;
  std::vector<std::string> aux;
  if (tense_group(t) == 1) {
    if (pol == Polarity::Negative) {
      const std::string support = do_support_aux(t, agr);
      if (!token_at(tokens, p, support) || !token_at(tokens, p + 1, "not"))
        return false;
      aux.push_back(support);
      p += 2;
    }
  } else {
    std::vector<std::string> chain = aux_chain(t, agr);
    if (!token_at(tokens, p, chain[0])) return false;
    ++p;
    if (pol == Polarity::Negative) {
      if (!token_at(tokens, p, "not")) return false;
      ++p;
    }
    for (std::size_t i = 1; i < chain.size(); ++i, ++p)
      if (!token_at(tokens, p, chain[i])) return false;
    aux = std::move(chain);
  }
  if (!verb_form_at(tokens, p, active_verb_form(t, agr, pol), lex))
    return false;
  out = {std::nullopt, std::move(aux), std::nullopt, tokens[p], p + 1};
  return true;
}

// modal + ["not"] + base verb.
inline bool match_modal_active(std::span<const std::string> tokens,
                               std::size_t pos, Polarity pol,
                               const Lexicon& lex, ComplexReading& out) {
  std::size_t p = pos;
  if (p >= tokens.size() || !lex.is_modal(tokens[p])) return false;
  const std::string modal = tokens[p++];
  if (pol == Polarity::Negative) {
    if (!token_at(tokens, p, "not")) return false;
    ++p;
  }
  if (!verb_form_at(tokens, p, VerbForm::Base, lex)) return false;
  out = {modal, {}, std::nullopt, tokens[p], p + 1};
  return true;
}

// Passive verb complex: group 1 is finite aux + participle, groups 2-4
// add the be/being/been tense marker after the chain.
inline bool match_passive_complex(std::span<const std::string> tokens,
                                  std::size_t pos, Tense t, Polarity pol,
                                  Agreement agr, const Lexicon& lex,
                                  ComplexReading& out) {
  std::size_t p = pos;
  std::vector<std::string> aux;
  std::optional<std::string> marker;
  if (tense_group(t) == 1) {
    const std::string finite = finite_passive_aux(t, agr);
    if (!token_at(tokens, p, finite)) return false;
    aux.push_back(finite);
    ++p;
    if (pol == Polarity::Negative) {
      if (!token_at(tokens, p, "not")) return false;
      ++p;
    }
  } else {
    std::vector<std::string> chain = aux_chain(t, agr);
    if (!token_at(tokens, p, chain[0])) return false;
    ++p;
    if (pol == Polarity::Negative) {
      if (!token_at(tokens, p, "not")) return false;
      ++p;
    }
    for (std::size_t i = 1; i < chain.size(); ++i, ++p)
      if (!token_at(tokens, p, chain[i])) return false;
    marker = *aux_tense_token(t);
    if (!token_at(tokens, p, *marker)) return false;
    ++p;
    aux = std::move(chain);
  }
  if (!verb_form_at(tokens, p, VerbForm::PastParticiple, lex)) return false;
  out = {std::nullopt, std::move(aux), std::move(marker), tokens[p], p + 1};
  return true;
}

// modal + ["not"] + "be" + participle.
inline bool match_modal_passive(std::span<const std::string> tokens,
                                std::size_t pos, Polarity pol,
                                const Lexicon& lex, ComplexReading& out) {
  std::size_t p = pos;
  if (p >= tokens.size() || !lex.is_modal(tokens[p])) return false;
  const std::string modal = tokens[p++];
  if (pol == Polarity::Negative) {
    if (!token_at(tokens, p, "not")) return false;
    ++p;
  }
  if (!token_at(tokens, p, "be")) return false;
  ++p;
  if (!verb_form_at(tokens, p, VerbForm::PastParticiple, lex)) return false;
  out = {modal, {}, "be", tokens[p], p + 1};
  return true;
}

}  // namespace detail

/// All readings of a token list as an active sentence, ordered by tense
/// group, then tense, with object-attached PP readings before
/// sentence-final ones; modal readings follow. Empty means unparseable.
inline std::vector<ActiveParse> parse_active(
    std::span<const std::string> tokens, const Lexicon& lex) {
  std::vector<ActiveParse> results;
  if (tokens.empty()) return results;
  const std::vector<NpReading> subjects =
      parse_np(tokens, 0, Role::Subject, lex);
  if (subjects.empty()) return results;

  auto finish = [&](const NpReading& subj, const detail::ComplexReading& vc,
                    Polarity pol, Tense tense) {
    for (const NpReading& obj : parse_np(tokens, vc.next, Role::Object, lex)) {
      ActiveTree tree;
      tree.subject = subj.np;
      tree.modal = vc.modal;
      tree.aux = vc.aux;
      tree.polarity = pol;
      tree.verb = vc.verb;
      tree.object = obj.np;
      if (obj.next == tokens.size()) {
        results.push_back({std::move(tree), tense, subj.agreement,
                           obj.agreement});
        continue;
      }
      for (PpReading& fin : parse_pp(tokens, obj.next, lex)) {
        if (fin.next != tokens.size()) continue;
        ActiveTree with_pp = tree;
        with_pp.final_pp = std::move(fin.pp);
        results.push_back({std::move(with_pp), tense, subj.agreement,
                           obj.agreement});
      }
    }
  };

  detail::ComplexReading vc;
  for (Tense t : kTensesByGroup)
    for (Polarity pol : {Polarity::Positive, Polarity::Negative})
      for (const NpReading& subj : subjects)
        if (detail::match_active_complex(tokens, subj.next, t, pol,
                                         subj.agreement, lex, vc))
          finish(subj, vc, pol, t);
  for (Polarity pol : {Polarity::Positive, Polarity::Negative})
    for (const NpReading& subj : subjects)
      if (detail::match_modal_active(tokens, subj.next, pol, lex, vc))
        finish(subj, vc, pol, Tense::SimplePresent);
  return results;
}

/// All readings of a token list as a passive sentence (subject + verb
/// complex + "by" + agent + optional final PP), same ordering policy as
/// parse_active.
inline std::vector<PassiveParse> parse_passive(
    std::span<const std::string> tokens, const Lexicon& lex) {
  std::vector<PassiveParse> results;
  if (tokens.empty()) return results;
  const std::vector<NpReading> subjects =
      parse_np(tokens, 0, Role::Subject, lex);
  if (subjects.empty()) return results;

  auto finish = [&](const NpReading& subj, const detail::ComplexReading& vc,
                    Polarity pol, Tense tense) {
    if (!detail::token_at(tokens, vc.next, kAgentMarker)) return;
    for (const NpReading& agent :
         parse_np(tokens, vc.next + 1, Role::Object, lex)) {
      PassiveTree tree;
      tree.subject = subj.np;
      tree.modal = vc.modal;
      tree.aux = vc.aux;
      tree.polarity = pol;
      tree.aux_tense = vc.aux_tense;
      tree.verb = vc.verb;
      tree.agent = agent.np;
      if (agent.next == tokens.size()) {
        results.push_back({std::move(tree), tense, subj.agreement,
                           agent.agreement});
        continue;
      }
      for (PpReading& fin : parse_pp(tokens, agent.next, lex)) {
        if (fin.next != tokens.size()) continue;
        PassiveTree with_pp = tree;
        with_pp.final_pp = std::move(fin.pp);
        results.push_back({std::move(with_pp), tense, subj.agreement,
                           agent.agreement});
      }
    }
  };

  detail::ComplexReading vc;
  for (Tense t : kTensesByGroup)
    for (Polarity pol : {Polarity::Positive, Polarity::Negative})
      for (const NpReading& subj : subjects)
        if (detail::match_passive_complex(tokens, subj.next, t, pol,
                                          subj.agreement, lex, vc))
          finish(subj, vc, pol, t);
  for (Polarity pol : {Polarity::Positive, Polarity::Negative})
    for (const NpReading& subj : subjects)
      if (detail::match_modal_passive(tokens, subj.next, pol, lex, vc))
        finish(subj, vc, pol, Tense::SimplePresent);
  return results;
}

}  // namespace voice
