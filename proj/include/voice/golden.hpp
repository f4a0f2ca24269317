#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "voice/pipeline.hpp"

namespace voice {

/// One attested active/passive sentence pair. Term strings are checked
/// only where given; `first_solution` demands the pair be solution #1
/// (unambiguous or committed readings), otherwise membership suffices.
struct GoldenPair {
  const char* active;
  const char* passive;
  const char* tense;
  const char* active_term;
  const char* passive_term;
  bool first_solution;
};

/// A sentence that must produce zero solutions in the given direction.
struct GoldenReject {
  const char* sentence;
  bool as_active;
};

inline constexpr std::array<GoldenPair, 15> kGoldenPairs = {{
    {"a beautiful woman has bought a small apple on the big beautiful table",
     "a small apple on the big beautiful table has been bought by a "
     "beautiful woman",
     "perfect_present",
     "s(np(det(a),adj([beautiful]),n(woman)),aux(has),v(bought),np(det(a),"
     "adj([small]),n(apple),pp(pre(on),np(det(the),adj([big,beautiful]),"
     "n(table)))))",
     "s(np(det(a),adj([small]),n(apple),pp(pre(on),np(det(the),adj([big,"
     "beautiful]),n(table)))),aux(has),auxTense(been),v(bought),agent(by),"
     "np(det(a),adj([beautiful]),n(woman)))",
     true},
    {"he should not buy a small apple",
     "a small apple should not be bought by him", "simple_present",
     "s(np(pro(he)),modal(should),pol(not),v(buy),np(det(a),adj([small]),"
     "n(apple)))",
     "s(np(det(a),adj([small]),n(apple)),modal(should),pol(not),aux(be),"
     "v(bought),agent(by),np(pro(him)))",
     true},
    {"he buys an apple", "an apple is bought by him", "simple_present",
     "s(np(pro(he)),v(buys),np(det(an),n(apple)))",
     "s(np(det(an),n(apple)),aux(is),v(bought),agent(by),np(pro(him)))",
     true},
    {"the man buys an apple", "an apple is bought by the man",
     "simple_present", nullptr, nullptr, true},
    {"the boy should bring a pen to the class",
     "a pen should be brought by the boy to the class", "simple_present",
     nullptr, nullptr, false},
    {"the man does not buy an apple", "an apple is not bought by the man",
     "simple_present", nullptr, nullptr, true},
    {"the man has bought an apple", "an apple has been bought by the man",
     "perfect_present", nullptr, nullptr, true},
    {"you will have been loving them",
     "they will have been being loved by you", "perfect_continuous_future",
     nullptr, nullptr, true},
    {"he will be buying an apple", "an apple will be being bought by him",
     "continuous_future", nullptr, nullptr, true},
    {"a man was buying an apple", "an apple was being bought by a man",
     "continuous_past", nullptr, nullptr, true},
    {"the man will have bought an apple",
     "an apple will have been bought by the man", "perfect_future", nullptr,
     nullptr, true},
    {"the man will buy an apple", "an apple will be bought by the man",
     "simple_future", nullptr, nullptr, true},
    {"a man buys an apple in the supermarket",
     "an apple is bought by a man in the supermarket", "simple_present",
     nullptr, nullptr, false},
    {"the man buys apples", "apples are bought by the man", "simple_present",
     nullptr, nullptr, true},
    {"they love me", "i am loved by them", "simple_present", nullptr, nullptr,
     true},
}};

inline constexpr std::array<GoldenReject, 6> kGoldenRejects = {{
    {"the man goes to school", true},
    {"he goes", true},
    {"him buys an apple", true},
    {"an apple is bought by him", true},
    {"he buys an apple", false},
    {"an apple is bought by he", false},
}};

enum class GoldenScope { Active, Passive, All };

struct GoldenOutcome {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> lines;
  bool ok() const { return failed == 0; }
};

namespace detail {

inline bool has_do_support(const std::vector<std::string>& tokens) {
  for (const std::string& t : tokens)
    if (t == "do" || t == "does" || t == "did") return true;
  return false;
}

inline void golden_check(GoldenOutcome& out, bool ok, std::string line,
                         const std::string& detail_on_fail) {
  if (ok) {
    ++out.passed;
    out.lines.push_back("PASS " + std::move(line));
  } else {
    ++out.failed;
    out.lines.push_back("FAIL " + std::move(line) + ": " + detail_on_fail);
  }
}

inline bool matches_golden(const ConversionResult& r, const GoldenPair& g,
                           const std::vector<std::string>& active_tokens,
                           const std::vector<std::string>& passive_tokens) {
  if (r.active_tokens != active_tokens) return false;
  if (r.passive_tokens != passive_tokens) return false;
  if (tense_name(r.tense) != g.tense) return false;
  if (g.active_term && r.active_term != g.active_term) return false;
  if (g.passive_term && r.passive_term != g.passive_term) return false;
  return !has_do_support(r.passive_tokens);
}

}  // namespace detail

/// Runs the embedded corpus plus a reconversion batch over the first
/// `batch_size` enumerated pairs. The lexicon is a parameter so a broken
/// user lexicon shows up as failures here.
inline GoldenOutcome run_golden_suite(const Lexicon& lex, GoldenScope scope,
                                      std::size_t batch_size = 200) {
  GoldenOutcome out;
  const bool do_active = scope != GoldenScope::Passive;
  const bool do_passive = scope != GoldenScope::Active;

  for (const GoldenPair& g : kGoldenPairs) {
    const std::vector<std::string> active_tokens = tokenize(g.active);
    const std::vector<std::string> passive_tokens = tokenize(g.passive);
    if (do_active) {
      const auto results = convert_from_active(active_tokens, lex);
      bool ok = false;
      if (g.first_solution) {
        ok = !results.empty() &&
             detail::matches_golden(results.front(), g, active_tokens,
                                    passive_tokens);
      } else {
        ok = std::any_of(results.begin(), results.end(),
                         [&](const ConversionResult& r) {
                           return detail::matches_golden(r, g, active_tokens,
                                                         passive_tokens);
                         });
      }
      detail::golden_check(out, ok,
                           std::string("active->passive: ") + g.active,
                           results.empty() ? "no solution"
                                           : "no solution matched");
    }
    if (do_passive) {
      const auto results = convert_from_passive(passive_tokens, lex);
      bool ok = false;
      if (g.first_solution) {
        ok = !results.empty() &&
             detail::matches_golden(results.front(), g, active_tokens,
                                    passive_tokens);
      } else {
        ok = std::any_of(results.begin(), results.end(),
                         [&](const ConversionResult& r) {
                           return detail::matches_golden(r, g, active_tokens,
                                                         passive_tokens);
                         });
      }
      detail::golden_check(out, ok,
                           std::string("passive->active: ") + g.passive,
                           results.empty() ? "no solution"
                                           : "no solution matched");
    }
  }

  for (const GoldenReject& g : kGoldenRejects) {
    if (g.as_active && do_active) {
      const auto results = convert_from_active(tokenize(g.sentence), lex);
      detail::golden_check(out, results.empty(),
                           std::string("rejects as active: ") + g.sentence,
                           "unexpectedly converted");
    }
    if (!g.as_active && do_passive) {
      const auto results = convert_from_passive(tokenize(g.sentence), lex);
      detail::golden_check(out, results.empty(),
                           std::string("rejects as passive: ") + g.sentence,
                           "unexpectedly converted");
    }
  }

  if (scope == GoldenScope::All && batch_size > 0) {
    EnumerationBounds bounds;
    std::size_t bad = 0;
    const auto pairs = enumerate_pairs(lex, bounds, batch_size);
    for (const ConversionResult& pair : pairs) {
      const auto forward = convert_from_active(pair.active_tokens, lex);
      const auto back = convert_from_passive(pair.passive_tokens, lex);
      const bool round_trip =
          std::find(forward.begin(), forward.end(), pair) != forward.end() &&
          std::any_of(back.begin(), back.end(), [&](const ConversionResult& r) {
            return r.active_tokens == pair.active_tokens;
          });
      if (!round_trip) ++bad;
    }
    detail::golden_check(out, bad == 0,
                         "round trip over " + std::to_string(pairs.size()) +
                             " enumerated pairs",
                         std::to_string(bad) + " pairs failed");
  }
  return out;
}

}  // namespace voice
