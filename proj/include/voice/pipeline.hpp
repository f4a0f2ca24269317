#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "voice/parser.hpp"
#include "voice/realizer.hpp"
#include "voice/transform.hpp"

namespace voice {

enum class SolutionMode { All, FirstOnly };

/// Parse as active, passivize, realize: one ConversionResult per parse, in
/// parse order. Empty result is the relation's "false" (no object, wrong
/// voice, or no parse at all).
inline std::vector<ConversionResult> convert_from_active(
    const std::vector<std::string>& tokens, const Lexicon& lex,
    SolutionMode mode = SolutionMode::All) {
  std::vector<ConversionResult> out;
  for (const ActiveParse& parse : parse_active(tokens, lex)) {
    const PassiveTree passive = passivize(parse.tree, parse.tense, lex);
    out.push_back({tokens, to_term_string(parse.tree),
                   realize_passive(passive), to_term_string(passive),
                   parse.tense});
    if (mode == SolutionMode::FirstOnly) break;
  }
  return out;
}

/// Parse as passive, activize, realize. Participle ambiguity fans out into
/// one result per candidate active tree.
inline std::vector<ConversionResult> convert_from_passive(
    const std::vector<std::string>& tokens, const Lexicon& lex,
    SolutionMode mode = SolutionMode::All) {
  std::vector<ConversionResult> out;
  for (const PassiveParse& parse : parse_passive(tokens, lex)) {
    for (const ActiveTree& active : activize(parse.tree, parse.tense, lex)) {
      out.push_back({realize_active(active), to_term_string(active), tokens,
                     to_term_string(parse.tree), parse.tense});
      if (mode == SolutionMode::FirstOnly) return out;
    }
  }
  return out;
}

/// Bounds for generate-all mode. Tenses and polarities are iterated in
/// the order given; PP depth limits noun-phrase PP nesting and, when at
/// least 1, also enables one sentence-final PP.
struct EnumerationBounds {
  int max_adjectives = 1;
  int max_pp_depth = 0;
  std::vector<Tense> tenses{kAllTenses.begin(), kAllTenses.end()};
  std::vector<Polarity> polarities{Polarity::Positive, Polarity::Negative};
  bool include_modals = false;
};

namespace detail {

// Visits noun-phrase choices in the declared deterministic order: heads
// are pronouns (file order), then nouns (file order, singular then
// plural) x determiners (file order, then det-less) x adjective subsets
// (by size, then index-lexicographic); every head is followed by its PP
// options (none, then prep x inner NP) when depth allows.
inline bool visit_np_choices(const Lexicon& lex, int max_adjectives,
                             int pp_depth,
                             const std::function<bool(const NounPhrase&)>& fn) {
  const auto with_pp_options = [&](const NounPhrase& base) {
    if (!fn(base)) return false;
    if (pp_depth < 1) return true;
    for (const std::string& prep : lex.prepositions) {
      const bool keep_going = visit_np_choices(
          lex, max_adjectives, pp_depth - 1, [&](const NounPhrase& inner) {
            NounPhrase np = base;
            np.pp = {PrepPhrase{prep, inner}};
            return fn(np);
          });
      if (!keep_going) return false;
    }
    return true;
  };

  for (const PronounEntry& p : lex.pronouns)
    if (!with_pp_options(NounPhrase::pro(p))) return false;

  std::vector<std::vector<std::string>> adj_sets{{}};
  std::vector<std::vector<std::size_t>> frontier{{}};
  for (int size = 1; size <= max_adjectives; ++size) {
    std::vector<std::vector<std::size_t>> next;
    for (const std::vector<std::size_t>& prefix : frontier) {
      const std::size_t start = prefix.empty() ? 0 : prefix.back() + 1;
      for (std::size_t i = start; i < lex.adjectives.size(); ++i) {
        std::vector<std::size_t> indices = prefix;
        indices.push_back(i);
        std::vector<std::string> words;
        for (std::size_t j : indices) words.push_back(lex.adjectives[j]);
        adj_sets.push_back(std::move(words));
        next.push_back(std::move(indices));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::optional<std::string>> det_options;
  for (const std::string& d : lex.determiners) det_options.emplace_back(d);
  det_options.push_back(std::nullopt);

  for (const NounLexeme& lexeme : lex.nouns) {
    for (const std::string* surface : {&lexeme.singular, &lexeme.plural}) {
      for (const std::optional<std::string>& det : det_options) {
        for (const std::vector<std::string>& adjs : adj_sets) {
          if (!with_pp_options(NounPhrase::full(det, adjs, *surface)))
            return false;
        }
      }
    }
  }
  return true;
}

// Visits (tree, tense) pairs: verb (file order) -> subject -> object ->
// final PP option -> tense -> polarity, with modal sentences after the
// tense block of each cell.
inline void visit_active_trees(
    const Lexicon& lex, const EnumerationBounds& bounds,
    const std::function<bool(const ActiveTree&, Tense)>& fn) {
  bool done = false;
  auto emit = [&](const ActiveTree& tree, Tense t) {
    if (!fn(tree, t)) done = true;
    return !done;
  };
  for (const VerbEntry& verb : lex.verbs) {
    if (done) return;
    visit_np_choices(lex, bounds.max_adjectives, bounds.max_pp_depth,
                     [&](const NounPhrase& subject) {
      const Agreement agr = agreement_of(subject, lex);
      return visit_np_choices(lex, bounds.max_adjectives, bounds.max_pp_depth,
                              [&](const NounPhrase& object) {
        auto with_final_pp = [&](const std::optional<PrepPhrase>& fin) {
          for (Tense t : bounds.tenses) {
            for (Polarity pol : bounds.polarities) {
              ActiveTree tree;
              tree.subject = subject;
              tree.object = object;
              tree.polarity = pol;
              tree.final_pp = fin;
              if (tense_group(t) == 1 && pol == Polarity::Negative) {
                tree.aux = {do_support_aux(t, agr)};
                tree.verb = verb.base;
              } else {
                tree.aux = aux_chain(t, agr);
                tree.verb = inflect(verb, active_verb_form(t, agr, pol));
              }
              if (!emit(tree, t)) return false;
            }
          }
          if (!bounds.include_modals) return true;
          for (const std::string& modal : lex.modals) {
            for (Polarity pol : bounds.polarities) {
              ActiveTree tree;
              tree.subject = subject;
              tree.object = object;
              tree.modal = modal;
              tree.polarity = pol;
              tree.verb = verb.base;
              tree.final_pp = fin;
              if (!emit(tree, Tense::SimplePresent)) return false;
            }
          }
          return true;
        };
        if (!with_final_pp(std::nullopt)) return false;
        if (bounds.max_pp_depth < 1) return true;
        for (const std::string& prep : lex.prepositions) {
          const bool keep_going = visit_np_choices(
              lex, bounds.max_adjectives, bounds.max_pp_depth - 1,
              [&](const NounPhrase& inner) {
                return with_final_pp(PrepPhrase{prep, inner});
              });
          if (!keep_going) return false;
        }
        return true;
      });
    });
  }
}

}  // namespace detail

struct EnumeratedTree {
  ActiveTree tree;
  Tense tense = Tense::SimplePresent;
};

/// First `limit` well-formed active trees within bounds, in the fixed
/// deterministic order, with the tense each was built for.
inline std::vector<EnumeratedTree> enumerate_active_trees(
    const Lexicon& lex, const EnumerationBounds& bounds, std::size_t limit) {
  std::vector<EnumeratedTree> out;
  if (limit == 0) return out;
  detail::visit_active_trees(lex, bounds,
                             [&](const ActiveTree& tree, Tense t) {
                               out.push_back({tree, t});
                               return out.size() < limit;
                             });
  return out;
}

/// Generate-all mode: converts each enumerated tree and returns the first
/// `limit` pairs. Every pair is self-consistent with convert_from_active.
inline std::vector<ConversionResult> enumerate_pairs(
    const Lexicon& lex, const EnumerationBounds& bounds, std::size_t limit) {
  std::vector<ConversionResult> out;
  if (limit == 0) return out;
  detail::visit_active_trees(lex, bounds,
                             [&](const ActiveTree& tree, Tense t) {
    const PassiveTree passive = passivize(tree, t, lex);
    out.push_back({realize_active(tree), to_term_string(tree),
                   realize_passive(passive), to_term_string(passive), t});
    return out.size() < limit;
  });
  return out;
}

}  // namespace voice
