#pragma once

#include <span>
#include <string>
#include <vector>

#include "voice/tree.hpp"

namespace voice {

std::vector<std::string> np_tokens(const NounPhrase& np, Role role);

inline std::vector<std::string> pp_tokens(const PrepPhrase& pp) {
  std::vector<std::string> out{pp.prep};
  std::vector<std::string> inner = np_tokens(pp.object, Role::Object);
  out.insert(out.end(), inner.begin(), inner.end());
  return out;
}

inline std::vector<std::string> np_tokens(const NounPhrase& np, Role role) {
  std::vector<std::string> out;
  if (np.is_pronoun()) {
    out.push_back(pronoun_form(*np.pronoun, role));
  } else {
    if (np.determiner) out.push_back(*np.determiner);
    out.insert(out.end(), np.adjectives.begin(), np.adjectives.end());
    out.push_back(np.noun);
  }
  if (!np.pp.empty()) {
    std::vector<std::string> attached = pp_tokens(np.pp.front());
    out.insert(out.end(), attached.begin(), attached.end());
  }
  return out;
}

namespace detail {

inline void append(std::vector<std::string>& out,
                   std::vector<std::string> tokens) {
  for (std::string& t : tokens) out.push_back(std::move(t));
}

// modal or aux chain with "not" after the first word when negative
inline void append_verb_group_head(std::vector<std::string>& out,
                                   const std::optional<std::string>& modal,
                                   const std::vector<std::string>& aux,
                                   Polarity polarity) {
  if (modal) {
    out.push_back(*modal);
    if (polarity == Polarity::Negative) out.push_back("not");
    return;
  }
  for (std::size_t i = 0; i < aux.size(); ++i) {
    out.push_back(aux[i]);
    if (i == 0 && polarity == Polarity::Negative) out.push_back("not");
  }
}

}  // namespace detail

inline std::vector<std::string> realize_active(const ActiveTree& tree) {
  std::vector<std::string> out = np_tokens(tree.subject, Role::Subject);
  detail::append_verb_group_head(out, tree.modal, tree.aux, tree.polarity);
  out.push_back(tree.verb);
  detail::append(out, np_tokens(tree.object, Role::Object));
  if (tree.final_pp) detail::append(out, pp_tokens(*tree.final_pp));
  return out;
}

inline std::vector<std::string> realize_passive(const PassiveTree& tree) {
  std::vector<std::string> out = np_tokens(tree.subject, Role::Subject);
  detail::append_verb_group_head(out, tree.modal, tree.aux, tree.polarity);
  if (tree.aux_tense) out.push_back(*tree.aux_tense);
  out.push_back(tree.verb);
  out.emplace_back(kAgentMarker);
  detail::append(out, np_tokens(tree.agent, Role::Object));
  if (tree.final_pp) detail::append(out, pp_tokens(*tree.final_pp));
  return out;
}

/// "[a,b,c]" display form used by the CLI and the transcripts.
inline std::string token_list_string(std::span<const std::string> tokens) {
  std::string out = "[";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ',';
    out += tokens[i];
  }
  out += ']';
  return out;
}

/// Plain space-joined sentence.
inline std::string sentence_string(std::span<const std::string> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace voice
