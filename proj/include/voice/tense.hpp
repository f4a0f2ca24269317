#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace voice {

/// The 12 English tenses, in the fixed enumeration order used for result
/// ordering, sentence enumeration, and CLI output.
enum class Tense {
  SimplePast,
  SimplePresent,
  SimpleFuture,
  ContinuousPast,
  ContinuousPresent,
  ContinuousFuture,
  PerfectPast,
  PerfectPresent,
  PerfectFuture,
  PerfectContinuousPast,
  PerfectContinuousPresent,
  PerfectContinuousFuture,
};

inline constexpr std::array<Tense, 12> kAllTenses = {
    Tense::SimplePast,           Tense::SimplePresent,
    Tense::SimpleFuture,         Tense::ContinuousPast,
    Tense::ContinuousPresent,    Tense::ContinuousFuture,
    Tense::PerfectPast,          Tense::PerfectPresent,
    Tense::PerfectFuture,        Tense::PerfectContinuousPast,
    Tense::PerfectContinuousPresent, Tense::PerfectContinuousFuture,
};

/// Number/person feature of a noun phrase. FirstSingular is the special
/// "i" row that selects am/was/have/do.
enum class Agreement { Singular, Plural, FirstSingular };

enum class Polarity { Positive, Negative };

/// Grammatical role of a noun phrase slot; decides pronoun surface case.
enum class Role { Subject, Object };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tense group = 1 + number of auxiliary verbs in the active sentence.
constexpr int tense_group(Tense t) {
  switch (t) {
    case Tense::SimplePast:
    case Tense::SimplePresent:
      return 1;
    case Tense::SimpleFuture:
    case Tense::ContinuousPast:
    case Tense::ContinuousPresent:
    case Tense::PerfectPast:
    case Tense::PerfectPresent:
      return 2;
    case Tense::ContinuousFuture:
    case Tense::PerfectFuture:
    case Tense::PerfectContinuousPast:
    case Tense::PerfectContinuousPresent:
      return 3;
    case Tense::PerfectContinuousFuture:
      return 4;
  }
  return 0;
}

/// Tenses ordered by (group, enumeration order); the parser tries them in
/// this order so parse results come out group-major.
inline constexpr std::array<Tense, 12> kTensesByGroup = {
    Tense::SimplePast,           Tense::SimplePresent,
    Tense::SimpleFuture,         Tense::ContinuousPast,
    Tense::ContinuousPresent,    Tense::PerfectPast,
    Tense::PerfectPresent,       Tense::ContinuousFuture,
    Tense::PerfectFuture,        Tense::PerfectContinuousPast,
    Tense::PerfectContinuousPresent, Tense::PerfectContinuousFuture,
};

constexpr std::string_view tense_name(Tense t) {
  switch (t) {
    case Tense::SimplePast: return "simple_past";
    case Tense::SimplePresent: return "simple_present";
    case Tense::SimpleFuture: return "simple_future";
    case Tense::ContinuousPast: return "continuous_past";
    case Tense::ContinuousPresent: return "continuous_present";
    case Tense::ContinuousFuture: return "continuous_future";
    case Tense::PerfectPast: return "perfect_past";
    case Tense::PerfectPresent: return "perfect_present";
    case Tense::PerfectFuture: return "perfect_future";
    case Tense::PerfectContinuousPast: return "perfect_continuous_past";
    case Tense::PerfectContinuousPresent: return "perfect_continuous_present";
    case Tense::PerfectContinuousFuture: return "perfect_continuous_future";
  }
  return "";
}

inline std::optional<Tense> tense_from_name(std::string_view name) {
  for (Tense t : kAllTenses)
    if (tense_name(t) == name) return t;
  return std::nullopt;
}

}  // namespace voice
