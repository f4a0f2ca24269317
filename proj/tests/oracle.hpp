#pragma once

// Hand-built English conjugation tables and a micro-grammar sentence
// enumerator. These were written down from a grammar book before the
// library and must stay independent of it: tests compare engine output
// against these tables, never the reverse.

#include <array>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using Tokens = std::vector<std::string>;

// Fixed tense order, identical to the engine's enumeration order.
inline constexpr std::array<const char*, 12> kTenseNames = {
    "simple_past",
    "simple_present",
    "simple_future",
    "continuous_past",
    "continuous_present",
    "continuous_future",
    "perfect_past",
    "perfect_present",
    "perfect_future",
    "perfect_continuous_past",
    "perfect_continuous_present",
    "perfect_continuous_future",
};

// Tense group = 1 + number of auxiliaries in the active sentence.
inline constexpr std::array<int, 12> kTenseGroups = {1, 1, 2, 2, 2, 3,
                                                     2, 2, 3, 3, 3, 4};

// Agreement rows: singular, plural, first person singular ("i").
enum Agr { kSing = 0, kPlural = 1, kFirstSing = 2 };

struct VerbForms {
  std::string base, third, past, part, ing;  // part = past participle
};

// Active-voice auxiliary chains, one row per tense, one column per Agr.
// Space-joined; empty = no auxiliary (group 1).
inline constexpr std::array<std::array<const char*, 3>, 12> kActiveAux = {{
    {"", "", ""},
    {"", "", ""},
    {"will", "will", "will"},
    {"was", "were", "was"},
    {"is", "are", "am"},
    {"will be", "will be", "will be"},
    {"had", "had", "had"},
    {"has", "have", "have"},
    {"will have", "will have", "will have"},
    {"had been", "had been", "had been"},
    {"has been", "have been", "have been"},
    {"will have been", "will have been", "will have been"},
}};

// Passive tense marker (be/being/been); empty for group 1.
inline constexpr std::array<const char*, 12> kAuxTense = {
    "",     "",     "be",    "being", "being", "being",
    "been", "been", "been", "being", "being", "being",
};

// Group-1 finite passive auxiliary, rows: simple_past, simple_present.
inline constexpr std::array<std::array<const char*, 3>, 2> kFinitePassive = {{
    {"was", "were", "was"},
    {"is", "are", "am"},
}};

// Group-1 do-support, rows: simple_past, simple_present.
inline constexpr std::array<std::array<const char*, 3>, 2> kDoSupport = {{
    {"did", "did", "did"},
    {"does", "do", "do"},
}};

// Pronoun case and number table (subject form, object form, agreement).
struct PronounRow {
  const char* subject;
  const char* object;
  Agr agr;
};
inline constexpr std::array<PronounRow, 7> kPronouns = {{
    {"he", "him", kSing},
    {"she", "her", kSing},
    {"i", "me", kFirstSing},
    {"you", "you", kPlural},
    {"we", "us", kPlural},
    {"they", "them", kPlural},
    {"it", "it", kSing},
}};

inline Tokens split(const std::string& text) {
  Tokens out;
  std::istringstream in(text);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

// The full verb complex (auxiliaries + "not" + main verb) of an active
// sentence for one tense/agreement/polarity.
inline Tokens active_verb_complex(int tense, Agr agr, const VerbForms& v,
                                  bool negative) {
  Tokens chain = split(kActiveAux[tense][agr]);
  if (chain.empty()) {
    if (negative) return {kDoSupport[tense][agr], "not", v.base};
    if (tense == 0) return {v.past};
    return {agr == kSing ? v.third : v.base};
  }
  Tokens out{chain[0]};
  if (negative) out.push_back("not");
  out.insert(out.end(), chain.begin() + 1, chain.end());
  if (tense == 2) {
    out.push_back(v.base);
  } else if (tense == 6 || tense == 7 || tense == 8) {
    out.push_back(v.part);
  } else {
    out.push_back(v.ing);
  }
  return out;
}

// The verb complex of the corresponding passive sentence; `agr` is the
// agreement of the passive subject (the former object).
inline Tokens passive_verb_complex(int tense, Agr agr, const VerbForms& v,
                                   bool negative) {
  Tokens out;
  if (tense <= 1) {
    out.push_back(kFinitePassive[tense][agr]);
    if (negative) out.push_back("not");
    out.push_back(v.part);
    return out;
  }
  Tokens chain = split(kActiveAux[tense][agr]);
  out.push_back(chain[0]);
  if (negative) out.push_back("not");
  out.insert(out.end(), chain.begin() + 1, chain.end());
  out.push_back(kAuxTense[tense]);
  out.push_back(v.part);
  return out;
}

inline Tokens modal_active_complex(const std::string& modal, const VerbForms& v,
                                   bool negative) {
  Tokens out{modal};
  if (negative) out.push_back("not");
  out.push_back(v.base);
  return out;
}

inline Tokens modal_passive_complex(const std::string& modal,
                                    const VerbForms& v, bool negative) {
  Tokens out{modal};
  if (negative) out.push_back("not");
  out.push_back("be");
  out.push_back(v.part);
  return out;
}

// Conjugation matrix for "the man <buy> an apple", all 12 tenses.
struct MatrixRow {
  const char* tense;
  const char* active;
  const char* passive;
};
inline constexpr std::array<MatrixRow, 12> kBuyMatrix = {{
    {"simple_past", "the man bought an apple", "an apple was bought by the man"},
    {"simple_present", "the man buys an apple", "an apple is bought by the man"},
    {"simple_future", "the man will buy an apple",
     "an apple will be bought by the man"},
    {"continuous_past", "the man was buying an apple",
     "an apple was being bought by the man"},
    {"continuous_present", "the man is buying an apple",
     "an apple is being bought by the man"},
    {"continuous_future", "the man will be buying an apple",
     "an apple will be being bought by the man"},
    {"perfect_past", "the man had bought an apple",
     "an apple had been bought by the man"},
    {"perfect_present", "the man has bought an apple",
     "an apple has been bought by the man"},
    {"perfect_future", "the man will have bought an apple",
     "an apple will have been bought by the man"},
    {"perfect_continuous_past", "the man had been buying an apple",
     "an apple had been being bought by the man"},
    {"perfect_continuous_present", "the man has been buying an apple",
     "an apple has been being bought by the man"},
    {"perfect_continuous_future", "the man will have been buying an apple",
     "an apple will have been being bought by the man"},
}};

// ---------------------------------------------------------------------------
// Micro-grammar enumeration: the reference language over the micro-lexicon
//   det the | noun cat cats | pro he him (singular) | verb see | prep on
// used for grammar-equivalence checks. Sentences are built directly from
// the tables above, not from the engine.
// ---------------------------------------------------------------------------

inline const VerbForms& micro_verb() {
  static const VerbForms see{"see", "sees", "saw", "seen", "seeing"};
  return see;
}

inline const char* kMicroLexicon =
    "det the\n"
    "noun cat cats\n"
    "pro he him singular\n"
    "verb see sees saw seen seeing\n"
    "prep on\n";

// Every surface token that can occur in a micro-lexicon sentence.
inline std::vector<std::string> micro_vocabulary() {
  return {"the", "cat",  "cats", "he",   "him",  "see",  "sees",
          "saw", "seen", "seeing", "on", "not",  "will", "have",
          "has", "had",  "is",   "are",  "am",   "was",  "were",
          "be",  "been", "being", "do",  "does", "did"};
}

struct MicroNp {
  Tokens tokens;
  Agr agr;
};

// All noun phrases of at most `max_len` tokens. Pronoun case follows the
// role; noun phrases may drop the determiner and may carry one attached
// "on" PP whose inner NP is recursively of the same shape (object case).
inline std::vector<MicroNp> micro_nps(bool subject_role, int max_len) {
  std::vector<MicroNp> out;
  if (max_len < 1) return out;
  const std::vector<MicroNp> bases = {
      {{subject_role ? "he" : "him"}, kSing},
      {{"cat"}, kSing},
      {{"cats"}, kPlural},
      {{"the", "cat"}, kSing},
      {{"the", "cats"}, kPlural},
  };
  for (const MicroNp& base : bases) {
    if (static_cast<int>(base.tokens.size()) > max_len) continue;
    out.push_back(base);
    const int room = max_len - static_cast<int>(base.tokens.size()) - 1;
    for (const MicroNp& inner : micro_nps(false, room)) {
      MicroNp np = base;
      np.tokens.push_back("on");
      np.tokens.insert(np.tokens.end(), inner.tokens.begin(),
                       inner.tokens.end());
      out.push_back(std::move(np));
    }
  }
  return out;
}

// The complete set of active sentences of length <= max_len over the
// micro-lexicon: subject NP + verb complex + object NP + optional final PP.
inline std::set<Tokens> micro_sentences(int max_len) {
  std::set<Tokens> out;
  const VerbForms& see = micro_verb();
  for (const MicroNp& subj : micro_nps(true, max_len - 2)) {
    for (int tense = 0; tense < 12; ++tense) {
      for (bool negative : {false, true}) {
        const Tokens vc = active_verb_complex(tense, subj.agr, see, negative);
        const int used = static_cast<int>(subj.tokens.size() + vc.size());
        if (used + 1 > max_len) continue;
        Tokens head = subj.tokens;
        head.insert(head.end(), vc.begin(), vc.end());
        for (const MicroNp& obj : micro_nps(false, max_len - used)) {
          Tokens sentence = head;
          sentence.insert(sentence.end(), obj.tokens.begin(),
                          obj.tokens.end());
          const int rem =
              max_len - used - static_cast<int>(obj.tokens.size()) - 1;
          for (const MicroNp& fin : micro_nps(false, rem)) {
            Tokens with_pp = sentence;
            with_pp.push_back("on");
            with_pp.insert(with_pp.end(), fin.tokens.begin(),
                           fin.tokens.end());
            out.insert(std::move(with_pp));
          }
          out.insert(std::move(sentence));
        }
      }
    }
  }
  return out;
}

}  // namespace oracle
