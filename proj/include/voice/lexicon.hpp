#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "voice/tense.hpp"

namespace voice {

enum class VerbForm { Base, ThirdSg, Past, PastParticiple, PresentParticiple };

/// One verb with its five stored forms. Regular verbs repeat base+"ed" in
/// the past and participle slots; irregulars store their own forms.
struct VerbEntry {
  std::string base;
  std::string third_sg;
  std::string past;
  std::string past_participle;
  std::string present_participle;
  bool operator==(const VerbEntry&) const = default;
};

inline const std::string& inflect(const VerbEntry& entry, VerbForm form) {
  switch (form) {
    case VerbForm::Base: return entry.base;
    case VerbForm::ThirdSg: return entry.third_sg;
    case VerbForm::Past: return entry.past;
    case VerbForm::PastParticiple: return entry.past_participle;
    case VerbForm::PresentParticiple: return entry.present_participle;
  }
  return entry.base;
}

struct PronounEntry {
  std::string subject_form;
  std::string object_form;
  Agreement agreement = Agreement::Singular;
  bool operator==(const PronounEntry&) const = default;
};

inline const std::string& pronoun_form(const PronounEntry& entry, Role role) {
  return role == Role::Subject ? entry.subject_form : entry.object_form;
}

/// Lookup view of one noun surface form.
struct NounEntry {
  std::string surface;
  Agreement agreement = Agreement::Singular;  // never FirstSingular
  bool operator==(const NounEntry&) const = default;
};

/// One `noun <singular> <plural>` line.
struct NounLexeme {
  std::string singular;
  std::string plural;
  bool operator==(const NounLexeme&) const = default;
};

class LexiconError : public Error {
 public:
  LexiconError(int line, const std::string& message)
      : Error("lexicon line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UnknownWordError : public Error {
 public:
  explicit UnknownWordError(std::string word)
      : Error("unknown word '" + word + "': define it in the lexicon"),
        word_(std::move(word)) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

/// Closed-class tokens the grammar knows without a lexicon entry.
inline bool is_auxiliary_token(std::string_view token) {
  static const char* kAux[] = {"will", "have", "has",  "had", "do",
                               "does", "did",  "is",   "are", "am",
                               "was",  "were", "be",   "been", "being"};
  for (const char* a : kAux)
    if (token == a) return true;
  return false;
}

/// Word inventory. Entry vectors preserve file order, which fixes the
/// deterministic enumeration order; a surface token may belong to several
/// categories and every lookup reports all readings.
struct Lexicon {
  std::vector<std::string> determiners;
  std::vector<NounLexeme> nouns;
  std::vector<PronounEntry> pronouns;
  std::vector<std::string> adjectives;
  std::vector<VerbEntry> verbs;
  std::vector<std::string> prepositions;
  std::vector<std::string> modals;

  bool operator==(const Lexicon&) const = default;

  bool is_determiner(std::string_view t) const { return contains(determiners, t); }
  bool is_adjective(std::string_view t) const { return contains(adjectives, t); }
  bool is_preposition(std::string_view t) const { return contains(prepositions, t); }
  bool is_modal(std::string_view t) const { return contains(modals, t); }

  std::optional<NounEntry> find_noun(std::string_view surface) const {
    for (const NounLexeme& n : nouns) {
      if (n.singular == surface) return NounEntry{n.singular, Agreement::Singular};
      if (n.plural == surface) return NounEntry{n.plural, Agreement::Plural};
    }
    return std::nullopt;
  }

  /// Pronoun entry whose `role` case form is `form`, if any.
  const PronounEntry* find_pronoun(std::string_view form, Role role) const {
    for (const PronounEntry& p : pronouns)
      if (pronoun_form(p, role) == form) return &p;
    return nullptr;
  }

  const VerbEntry* find_verb_base(std::string_view base) const {
    for (const VerbEntry& v : verbs)
      if (v.base == base) return &v;
    return nullptr;
  }

  struct VerbReading {
    const VerbEntry* entry;
    VerbForm form;
  };

  /// All (entry, form) readings of a surface token. When no stored form
  /// matches, a token of shape base+"ed" for a known base is recognized
  /// as past / past participle (the regular rule).
  std::vector<VerbReading> verb_readings(std::string_view surface) const {
    std::vector<VerbReading> out;
    for (const VerbEntry& v : verbs) {
      if (v.base == surface) out.push_back({&v, VerbForm::Base});
      if (v.third_sg == surface) out.push_back({&v, VerbForm::ThirdSg});
      if (v.past == surface) out.push_back({&v, VerbForm::Past});
      if (v.past_participle == surface)
        out.push_back({&v, VerbForm::PastParticiple});
      if (v.present_participle == surface)
        out.push_back({&v, VerbForm::PresentParticiple});
    }
    if (out.empty() && surface.size() > 2 && surface.substr(surface.size() - 2) == "ed") {
      if (const VerbEntry* e = find_verb_base(surface.substr(0, surface.size() - 2))) {
        out.push_back({e, VerbForm::Past});
        out.push_back({e, VerbForm::PastParticiple});
      }
    }
    return out;
  }

  /// Entries whose `form` reading of `surface` exists (fallback included).
  std::vector<const VerbEntry*> verbs_with_form(std::string_view surface,
                                                VerbForm form) const {
    std::vector<const VerbEntry*> out;
    for (const VerbReading& r : verb_readings(surface))
      if (r.form == form) out.push_back(r.entry);
    return out;
  }

  /// True if the token can occur in a sentence at all: any lexicon
  /// category, an auxiliary, or "not".
  bool knows_word(std::string_view token) const {
    if (token == "not" || is_auxiliary_token(token)) return true;
    if (is_determiner(token) || is_adjective(token) || is_preposition(token) ||
        is_modal(token))
      return true;
    if (find_noun(token)) return true;
    if (find_pronoun(token, Role::Subject) || find_pronoun(token, Role::Object))
      return true;
    return !verb_readings(token).empty();
  }

 private:
  static bool contains(const std::vector<std::string>& v, std::string_view t) {
    return std::find(v.begin(), v.end(), t) != v.end();
  }
};

namespace detail {

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string field;
  while (in >> field) out.push_back(to_lower(field));
  return out;
}

inline std::optional<Agreement> agreement_from_name(std::string_view name) {
  if (name == "singular") return Agreement::Singular;
  if (name == "plural") return Agreement::Plural;
  if (name == "first_singular") return Agreement::FirstSingular;
  return std::nullopt;
}

inline std::string_view agreement_name(Agreement a) {
  switch (a) {
    case Agreement::Singular: return "singular";
    case Agreement::Plural: return "plural";
    case Agreement::FirstSingular: return "first_singular";
  }
  return "";
}

inline void add_unique(std::vector<std::string>& v, std::string token) {
  if (std::find(v.begin(), v.end(), token) == v.end())
    v.push_back(std::move(token));
}

}  // namespace detail

/// Parses the line-based lexicon format:
///   det X | noun SG PL | pro SUBJ OBJ AGR | adj X |
///   verb BASE 3SG PAST PART ING | prep X | modal X
/// '#' starts a comment; later duplicate lines replace earlier ones.
inline Lexicon parse_lexicon_source(std::string_view text) {
  Lexicon lex;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<std::string> f = detail::split_fields(line);
    if (f.empty()) continue;
    const std::string& kind = f[0];
    auto need = [&](std::size_t n) {
      if (f.size() != n)
        throw LexiconError(line_no, "'" + kind + "' takes " +
                                        std::to_string(n - 1) + " fields, got " +
                                        std::to_string(f.size() - 1));
    };
    if (kind == "det") {
      need(2);
      detail::add_unique(lex.determiners, f[1]);
    } else if (kind == "noun") {
      need(3);
      auto it = std::find_if(lex.nouns.begin(), lex.nouns.end(),
                             [&](const NounLexeme& n) { return n.singular == f[1]; });
      if (it != lex.nouns.end())
        *it = NounLexeme{f[1], f[2]};
      else
        lex.nouns.push_back(NounLexeme{f[1], f[2]});
    } else if (kind == "pro") {
      need(4);
      auto agr = detail::agreement_from_name(f[3]);
      if (!agr)
        throw LexiconError(line_no, "bad agreement '" + f[3] + "'");
      PronounEntry entry{f[1], f[2], *agr};
      // at most one entry per subject form and per object form
      auto clash = [&](const PronounEntry& p) {
        return p.subject_form == entry.subject_form ||
               p.object_form == entry.object_form;
      };
      auto it = std::find_if(lex.pronouns.begin(), lex.pronouns.end(), clash);
      if (it != lex.pronouns.end()) {
        *it = entry;
        lex.pronouns.erase(
            std::remove_if(it + 1, lex.pronouns.end(), clash),
            lex.pronouns.end());
      } else {
        lex.pronouns.push_back(std::move(entry));
      }
    } else if (kind == "adj") {
      need(2);
      detail::add_unique(lex.adjectives, f[1]);
    } else if (kind == "verb") {
      need(6);
      VerbEntry entry{f[1], f[2], f[3], f[4], f[5]};
      auto it = std::find_if(lex.verbs.begin(), lex.verbs.end(),
                             [&](const VerbEntry& v) { return v.base == f[1]; });
      if (it != lex.verbs.end())
        *it = std::move(entry);
      else
        lex.verbs.push_back(std::move(entry));
    } else if (kind == "prep") {
      need(2);
      detail::add_unique(lex.prepositions, f[1]);
    } else if (kind == "modal") {
      need(2);
      detail::add_unique(lex.modals, f[1]);
    } else {
      throw LexiconError(line_no, "unknown category '" + kind + "'");
    }
  }
  return lex;
}

inline Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_lexicon_source(buffer.str());
}

/// Canonical dump; parse_lexicon_source(dump_lexicon_source(lex)) == lex.
inline std::string dump_lexicon_source(const Lexicon& lex) {
  std::ostringstream out;
  for (const auto& d : lex.determiners) out << "det " << d << '\n';
  for (const auto& n : lex.nouns)
    out << "noun " << n.singular << ' ' << n.plural << '\n';
  for (const auto& p : lex.pronouns)
    out << "pro " << p.subject_form << ' ' << p.object_form << ' '
        << detail::agreement_name(p.agreement) << '\n';
  for (const auto& a : lex.adjectives) out << "adj " << a << '\n';
  for (const auto& v : lex.verbs)
    out << "verb " << v.base << ' ' << v.third_sg << ' ' << v.past << ' '
        << v.past_participle << ' ' << v.present_participle << '\n';
  for (const auto& p : lex.prepositions) out << "prep " << p << '\n';
  for (const auto& m : lex.modals) out << "modal " << m << '\n';
  return out.str();
}

inline constexpr const char* kBuiltinLexiconSource = R"(# builtin lexicon
det a
det an
det the

noun man men
noun woman women
noun boy boys
noun girl girls
noun apple apples
noun pen pens
noun table tables
noun supermarket supermarkets
noun class classes
noun school schools
noun cat cats

pro he him singular
pro she her singular
pro i me first_singular
pro you you plural
pro we us plural
pro they them plural
pro it it singular

adj small
adj big
adj beautiful

verb buy buys bought bought buying
verb bring brings brought brought bringing
verb love loves loved loved loving
verb like likes liked liked liking
verb play plays played played playing
verb see sees saw seen seeing
verb go goes went gone going
verb eat eats ate eaten eating
verb look looks looked looked looking
verb add adds added added adding
verb work works worked worked working
verb visit visits visited visited visiting

prep on
prep in
prep by
prep to

modal should
modal can
modal may
modal must
)";

inline const Lexicon& builtin_lexicon() {
  static const Lexicon lex = parse_lexicon_source(kBuiltinLexiconSource);
  return lex;
}

// ---------------------------------------------------------------------------
// Auxiliary selection tables
// ---------------------------------------------------------------------------

/// Active-voice auxiliary chain; length = tense_group - 1. The first
/// element, when number-sensitive, agrees with `agr` (FirstSingular picks
/// the special am/was/have row).
inline std::vector<std::string> aux_chain(Tense t, Agreement agr) {
  const bool plural = agr == Agreement::Plural;
  const bool first = agr == Agreement::FirstSingular;
  switch (t) {
    case Tense::SimplePast:
    case Tense::SimplePresent:
      return {};
    case Tense::SimpleFuture:
      return {"will"};
    case Tense::ContinuousPast:
      return {plural ? "were" : "was"};
    case Tense::ContinuousPresent:
      return {first ? "am" : plural ? "are" : "is"};
    case Tense::ContinuousFuture:
      return {"will", "be"};
    case Tense::PerfectPast:
      return {"had"};
    case Tense::PerfectPresent:
      return {plural || first ? "have" : "has"};
    case Tense::PerfectFuture:
      return {"will", "have"};
    case Tense::PerfectContinuousPast:
      return {"had", "been"};
    case Tense::PerfectContinuousPresent:
      return {plural || first ? "have" : "has", "been"};
    case Tense::PerfectContinuousFuture:
      return {"will", "have", "been"};
  }
  return {};
}

/// The passive tense marker: be (simple future), being (continuous and
/// perfect continuous), been (perfect); none for group 1.
inline std::optional<std::string> aux_tense_token(Tense t) {
  switch (t) {
    case Tense::SimplePast:
    case Tense::SimplePresent:
      return std::nullopt;
    case Tense::SimpleFuture:
      return "be";
    case Tense::PerfectPast:
    case Tense::PerfectPresent:
    case Tense::PerfectFuture:
      return "been";
    default:
      return "being";
  }
}

/// Finite auxiliary of a group-1 passive (is/are/am, was/were).
inline std::string finite_passive_aux(Tense t, Agreement agr) {
  const bool plural = agr == Agreement::Plural;
  if (t == Tense::SimplePresent)
    return agr == Agreement::FirstSingular ? "am" : plural ? "are" : "is";
  if (t == Tense::SimplePast) return plural ? "were" : "was";
  throw Error("finite_passive_aux: tense outside group 1");
}

/// Do-support auxiliary of a group-1 negative (does/do, did).
inline std::string do_support_aux(Tense t, Agreement agr) {
  if (t == Tense::SimplePresent)
    return agr == Agreement::Singular ? "does" : "do";
  if (t == Tense::SimplePast) return "did";
  throw Error("do_support_aux: tense outside group 1");
}

/// Form taken by the main verb of an active sentence. Group-1 negatives
/// take the base form after the do-support auxiliary.
inline VerbForm active_verb_form(Tense t, Agreement agr, Polarity pol) {
  if (tense_group(t) == 1 && pol == Polarity::Negative) return VerbForm::Base;
  switch (t) {
    case Tense::SimplePast:
      return VerbForm::Past;
    case Tense::SimplePresent:
      return agr == Agreement::Singular ? VerbForm::ThirdSg : VerbForm::Base;
    case Tense::SimpleFuture:
      return VerbForm::Base;
    case Tense::PerfectPast:
    case Tense::PerfectPresent:
    case Tense::PerfectFuture:
      return VerbForm::PastParticiple;
    default:
      return VerbForm::PresentParticiple;
  }
}

}  // namespace voice
