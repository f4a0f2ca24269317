#include "voice/lexicon.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "oracle.hpp"

namespace voice {
namespace {

Agreement to_agreement(oracle::Agr a) {
  switch (a) {
    case oracle::kSing: return Agreement::Singular;
    case oracle::kPlural: return Agreement::Plural;
    case oracle::kFirstSing: return Agreement::FirstSingular;
  }
  return Agreement::Singular;
}

constexpr Agreement kAgreements[] = {Agreement::Singular, Agreement::Plural,
                                     Agreement::FirstSingular};

TEST(LexiconParse, SingleVerbLine) {
  const Lexicon lex = parse_lexicon_source("verb buy buys bought bought buying");
  ASSERT_EQ(lex.verbs.size(), 1u);
  EXPECT_EQ(lex.verbs[0],
            (VerbEntry{"buy", "buys", "bought", "bought", "buying"}));
}

TEST(LexiconParse, EmptyTextGivesEmptyLexicon) {
  EXPECT_EQ(parse_lexicon_source(""), Lexicon{});
}

TEST(LexiconParse, FieldCountErrorCarriesLineNumber) {
  try {
    parse_lexicon_source("verb buy buys");
    FAIL() << "expected LexiconError";
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.line(), 1);
  }
}

TEST(LexiconParse, UnknownCategoryErrorCarriesLineNumber) {
  try {
    parse_lexicon_source("det a\n\narticle the\n");
    FAIL() << "expected LexiconError";
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(LexiconParse, BadAgreementKeyword) {
  EXPECT_THROW(parse_lexicon_source("pro he him dual"), LexiconError);
}

TEST(LexiconParse, CommentsAndBlankLines) {
  const Lexicon lex = parse_lexicon_source(
      "# a comment\n"
      "det the  # trailing comment\n"
      "\n"
      "noun cat cats\n");
  EXPECT_EQ(lex.determiners, (std::vector<std::string>{"the"}));
  ASSERT_EQ(lex.nouns.size(), 1u);
  EXPECT_EQ(lex.nouns[0], (NounLexeme{"cat", "cats"}));
}

TEST(LexiconParse, LaterDuplicateReplacesEarlier) {
  const Lexicon lex = parse_lexicon_source(
      "verb buy buys bought bought buying\n"
      "noun man men\n"
      "verb buy buys purchased purchased buying\n"
      "noun man mans\n");
  ASSERT_EQ(lex.verbs.size(), 1u);
  EXPECT_EQ(lex.verbs[0].past, "purchased");
  ASSERT_EQ(lex.nouns.size(), 1u);
  EXPECT_EQ(lex.nouns[0].plural, "mans");
}

TEST(LexiconParse, UppercaseInputIsFolded) {
  const Lexicon lex = parse_lexicon_source("DET The");
  EXPECT_TRUE(lex.is_determiner("the"));
}

TEST(LexiconDump, RoundTripIsIdempotent) {
  const Lexicon& builtin = builtin_lexicon();
  const std::string dump = dump_lexicon_source(builtin);
  const Lexicon reloaded = parse_lexicon_source(dump);
  EXPECT_EQ(reloaded, builtin);
  EXPECT_EQ(dump_lexicon_source(reloaded), dump);
}

TEST(Inflect, StoredFormsAreTotal) {
  const Lexicon& lex = builtin_lexicon();
  const VerbEntry* buy = lex.find_verb_base("buy");
  const VerbEntry* look = lex.find_verb_base("look");
  const VerbEntry* love = lex.find_verb_base("love");
  ASSERT_TRUE(buy && look && love);
  EXPECT_EQ(inflect(*buy, VerbForm::PastParticiple), "bought");
  EXPECT_EQ(inflect(*look, VerbForm::PastParticiple), "looked");
  EXPECT_EQ(inflect(*love, VerbForm::PresentParticiple), "loving");
  for (const VerbEntry& v : lex.verbs)
    for (VerbForm f : {VerbForm::Base, VerbForm::ThirdSg, VerbForm::Past,
                       VerbForm::PastParticiple, VerbForm::PresentParticiple})
      EXPECT_FALSE(inflect(v, f).empty());
}

TEST(PronounTable, MatchesHandTable) {
  const Lexicon& lex = builtin_lexicon();
  ASSERT_EQ(lex.pronouns.size(), oracle::kPronouns.size());
  for (const oracle::PronounRow& row : oracle::kPronouns) {
    const PronounEntry* entry = lex.find_pronoun(row.subject, Role::Subject);
    ASSERT_NE(entry, nullptr) << row.subject;
    EXPECT_EQ(pronoun_form(*entry, Role::Subject), row.subject);
    EXPECT_EQ(pronoun_form(*entry, Role::Object), row.object);
    EXPECT_EQ(entry->agreement, to_agreement(row.agr));
  }
  EXPECT_EQ(pronoun_form(*lex.find_pronoun("he", Role::Subject), Role::Object),
            "him");
  EXPECT_EQ(pronoun_form(*lex.find_pronoun("it", Role::Subject), Role::Object),
            "it");
  EXPECT_EQ(pronoun_form(*lex.find_pronoun("i", Role::Subject), Role::Object),
            "me");
}

TEST(AuxChain, MatchesHandTableForAllTensesAndAgreements) {
  for (std::size_t t = 0; t < kAllTenses.size(); ++t) {
    for (int a = 0; a < 3; ++a) {
      const std::vector<std::string> expected =
          oracle::split(oracle::kActiveAux[t][a]);
      EXPECT_EQ(aux_chain(kAllTenses[t], kAgreements[a]), expected)
          << oracle::kTenseNames[t] << " agr " << a;
    }
  }
}

TEST(AuxChain, LengthIsGroupMinusOne) {
  for (Tense t : kAllTenses)
    for (Agreement a : kAgreements)
      EXPECT_EQ(static_cast<int>(aux_chain(t, a).size()), tense_group(t) - 1);
}

TEST(AuxTenseToken, MatchesHandTable) {
  for (std::size_t t = 0; t < kAllTenses.size(); ++t) {
    const std::optional<std::string> got = aux_tense_token(kAllTenses[t]);
    const std::string expected = oracle::kAuxTense[t];
    if (expected.empty())
      EXPECT_FALSE(got.has_value()) << oracle::kTenseNames[t];
    else
      EXPECT_EQ(got, expected) << oracle::kTenseNames[t];
  }
}

TEST(AuxTenseToken, AbsentExactlyForGroupOne) {
  for (Tense t : kAllTenses)
    EXPECT_EQ(aux_tense_token(t).has_value(), tense_group(t) > 1);
}

TEST(FinitePassiveAux, MatchesHandTable) {
  const Tense group1[] = {Tense::SimplePast, Tense::SimplePresent};
  for (int t = 0; t < 2; ++t)
    for (int a = 0; a < 3; ++a)
      EXPECT_EQ(finite_passive_aux(group1[t], kAgreements[a]),
                oracle::kFinitePassive[t][a]);
  EXPECT_EQ(finite_passive_aux(Tense::SimplePresent, Agreement::Singular), "is");
  EXPECT_EQ(finite_passive_aux(Tense::SimplePast, Agreement::Plural), "were");
  EXPECT_EQ(finite_passive_aux(Tense::SimplePresent, Agreement::FirstSingular),
            "am");
  EXPECT_THROW(finite_passive_aux(Tense::PerfectPresent, Agreement::Singular),
               Error);
}

TEST(DoSupportAux, MatchesHandTable) {
  const Tense group1[] = {Tense::SimplePast, Tense::SimplePresent};
  for (int t = 0; t < 2; ++t)
    for (int a = 0; a < 3; ++a)
      EXPECT_EQ(do_support_aux(group1[t], kAgreements[a]),
                oracle::kDoSupport[t][a]);
  EXPECT_EQ(do_support_aux(Tense::SimplePresent, Agreement::Singular), "does");
  EXPECT_EQ(do_support_aux(Tense::SimplePast, Agreement::Plural), "did");
  EXPECT_EQ(do_support_aux(Tense::SimplePresent, Agreement::FirstSingular),
            "do");
  EXPECT_THROW(do_support_aux(Tense::SimpleFuture, Agreement::Singular), Error);
}

TEST(BuiltinLexicon, CoversTheStockVocabulary) {
  const Lexicon& lex = builtin_lexicon();
  for (const char* n :
       {"man", "woman", "boy", "girl", "apple", "pen", "table", "supermarket",
        "class", "school", "cat"})
    EXPECT_TRUE(lex.find_noun(n).has_value()) << n;
  for (const char* n : {"men", "women", "apples", "cats"}) {
    auto entry = lex.find_noun(n);
    ASSERT_TRUE(entry.has_value()) << n;
    EXPECT_EQ(entry->agreement, Agreement::Plural);
  }
  for (const char* d : {"a", "an", "the"}) EXPECT_TRUE(lex.is_determiner(d));
  for (const char* a : {"small", "big", "beautiful"})
    EXPECT_TRUE(lex.is_adjective(a));
  for (const char* v : {"buy", "bring", "love", "like", "play", "see", "go",
                        "eat", "look", "add", "work", "visit"})
    EXPECT_NE(lex.find_verb_base(v), nullptr) << v;
  for (const char* p : {"on", "in", "by", "to"})
    EXPECT_TRUE(lex.is_preposition(p));
  for (const char* m : {"should", "can", "may", "must"})
    EXPECT_TRUE(lex.is_modal(m));
  // "will" is the future auxiliary, not a modal entry
  EXPECT_FALSE(lex.is_modal("will"));
}

TEST(BuiltinLexicon, NounEntriesAreNeverFirstSingular) {
  for (const NounLexeme& n : builtin_lexicon().nouns) {
    EXPECT_NE(builtin_lexicon().find_noun(n.singular)->agreement,
              Agreement::FirstSingular);
    EXPECT_NE(builtin_lexicon().find_noun(n.plural)->agreement,
              Agreement::FirstSingular);
  }
}

TEST(VerbReadings, AmbiguousPastAndParticiple) {
  const Lexicon& lex = builtin_lexicon();
  const auto readings = lex.verb_readings("bought");
  ASSERT_EQ(readings.size(), 2u);
  EXPECT_EQ(readings[0].form, VerbForm::Past);
  EXPECT_EQ(readings[1].form, VerbForm::PastParticiple);
  EXPECT_EQ(readings[0].entry->base, "buy");
}

TEST(VerbReadings, RegularEdFallback) {
  // "fetched" is stored nowhere, but the base "fetch" is known.
  const Lexicon lex =
      parse_lexicon_source("verb fetch fetches got got getting");
  const auto readings = lex.verb_readings("fetched");
  ASSERT_EQ(readings.size(), 2u);
  EXPECT_EQ(readings[0].entry->base, "fetch");
  EXPECT_EQ(readings[0].form, VerbForm::Past);
  EXPECT_EQ(readings[1].form, VerbForm::PastParticiple);
  EXPECT_TRUE(lex.verb_readings("fetchy").empty());
}

TEST(KnowsWord, CategoriesAuxiliariesAndNot) {
  const Lexicon& lex = builtin_lexicon();
  for (const char* w : {"the", "man", "him", "small", "buys", "on", "should",
                        "not", "will", "been", "does", "am"})
    EXPECT_TRUE(lex.knows_word(w)) << w;
  EXPECT_FALSE(lex.knows_word("xylophone"));
  EXPECT_FALSE(lex.knows_word(""));
}

TEST(ActiveVerbForm, SelectsByTenseAgreementPolarity) {
  EXPECT_EQ(active_verb_form(Tense::SimplePresent, Agreement::Singular,
                             Polarity::Positive),
            VerbForm::ThirdSg);
  EXPECT_EQ(active_verb_form(Tense::SimplePresent, Agreement::Plural,
                             Polarity::Positive),
            VerbForm::Base);
  EXPECT_EQ(active_verb_form(Tense::SimplePresent, Agreement::FirstSingular,
                             Polarity::Positive),
            VerbForm::Base);
  EXPECT_EQ(active_verb_form(Tense::SimplePast, Agreement::Singular,
                             Polarity::Negative),
            VerbForm::Base);
  EXPECT_EQ(active_verb_form(Tense::PerfectPresent, Agreement::Singular,
                             Polarity::Negative),
            VerbForm::PastParticiple);
  EXPECT_EQ(active_verb_form(Tense::PerfectContinuousFuture,
                             Agreement::Plural, Polarity::Positive),
            VerbForm::PresentParticiple);
}

}  // namespace
}  // namespace voice
