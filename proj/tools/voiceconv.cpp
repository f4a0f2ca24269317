// voiceconv: command-line front end for the active/passive conversion
// engine. Subcommands mirror the interactive scenario: active, passive,
// enumerate, test-suite, repl.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "voice/voice.hpp"

namespace {

struct Options {
  std::string lexicon_path;
  bool first_only = false;
  std::string format = "text";
};

voice::Lexicon load_lexicon(const Options& opt) {
  if (opt.lexicon_path.empty()) return voice::builtin_lexicon();
  return voice::load_lexicon_file(opt.lexicon_path);
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

nlohmann::json solution_json(const voice::ConversionResult& r) {
  return nlohmann::json{{"activeS", r.active_tokens},
                        {"activeRe", r.active_term},
                        {"passiveS", r.passive_tokens},
                        {"passiveRe", r.passive_term},
                        {"tense", voice::tense_name(r.tense)}};
}

void print_solution(std::ostream& out, const voice::ConversionResult& r,
                    bool active_input) {
  if (active_input) {
    out << "ActiveS: " << voice::token_list_string(r.active_tokens) << '\n'
        << "Tense: " << voice::tense_name(r.tense) << '\n'
        << "ActiveRe: " << r.active_term << '\n'
        << "PassiveS: " << voice::token_list_string(r.passive_tokens) << '\n'
        << "PassiveRe: " << r.passive_term << '\n';
  } else {
    out << "PassiveS: " << voice::token_list_string(r.passive_tokens) << '\n'
        << "Tense: " << voice::tense_name(r.tense) << '\n'
        << "ActiveS: " << voice::token_list_string(r.active_tokens) << '\n'
        << "ActiveRe: " << r.active_term << '\n'
        << "PassiveRe: " << r.passive_term << '\n';
  }
}

// Converts one tokenized sentence and prints every solution; returns the
// exit status (0 solutions, 1 none, 2 unknown word).
int convert_and_print(const std::vector<std::string>& tokens,
                      bool active_input, const voice::Lexicon& lex,
                      const Options& opt) {
  for (const std::string& token : tokens) {
    if (!lex.knows_word(token)) {
      std::cerr << "error: unknown word '" << token
                << "': define it in the lexicon (see --lexicon)\n";
      return 2;
    }
  }
  const voice::SolutionMode mode = opt.first_only
                                       ? voice::SolutionMode::FirstOnly
                                       : voice::SolutionMode::All;
  const std::vector<voice::ConversionResult> results =
      active_input ? voice::convert_from_active(tokens, lex, mode)
                   : voice::convert_from_passive(tokens, lex, mode);
  if (results.empty()) {
    std::cout << "false." << std::endl;
    return 1;
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (opt.format == "json") {
      std::cout << solution_json(results[i]).dump() << '\n';
    } else {
      if (i) std::cout << '\n';
      print_solution(std::cout, results[i], active_input);
    }
  }
  std::cout.flush();
  return 0;
}

int run_convert(bool active_input, const std::vector<std::string>& words,
                const Options& opt) {
  const voice::Lexicon lex = load_lexicon(opt);
  return convert_and_print(voice::tokenize(join_words(words)), active_input,
                           lex, opt);
}

int run_enumerate(const Options& opt, const voice::EnumerationBounds& bounds,
                  std::size_t limit) {
  const voice::Lexicon lex = load_lexicon(opt);
  const auto pairs = voice::enumerate_pairs(lex, bounds, limit);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (opt.format == "json") {
      std::cout << solution_json(pairs[i]).dump() << '\n';
    } else {
      std::cout << (i + 1) << ". "
                << voice::token_list_string(pairs[i].active_tokens) << " -> "
                << voice::token_list_string(pairs[i].passive_tokens) << " ("
                << voice::tense_name(pairs[i].tense) << ")\n";
    }
  }
  std::cout.flush();
  return 0;
}

int run_test_suite(const Options& opt, const std::string& which) {
  const voice::Lexicon lex = load_lexicon(opt);
  voice::GoldenScope scope = voice::GoldenScope::All;
  if (which == "active") scope = voice::GoldenScope::Active;
  if (which == "passive") scope = voice::GoldenScope::Passive;
  const voice::GoldenOutcome outcome = voice::run_golden_suite(lex, scope);
  for (const std::string& line : outcome.lines) std::cout << line << '\n';
  std::cout << outcome.passed << " passed, " << outcome.failed << " failed"
            << std::endl;
  return outcome.ok() ? 0 : 1;
}

int run_repl(const Options& opt) {
  const voice::Lexicon lex = load_lexicon(opt);
  std::string line;
  while (std::getline(std::cin, line)) {
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line == "quit" || line == "exit") break;
    bool active_input = false;
    std::string sentence;
    if (line.rfind("active:", 0) == 0) {
      active_input = true;
      sentence = line.substr(7);
    } else if (line.rfind("passive:", 0) == 0) {
      sentence = line.substr(8);
    } else {
      std::cerr << "error: expected 'active: <sentence>' or "
                   "'passive: <sentence>'\n";
      continue;
    }
    convert_and_print(voice::tokenize(sentence), active_input, lex, opt);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bidirectional English active/passive voice converter"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--lexicon", opt.lexicon_path,
                 "Lexicon file (default: builtin inventory)");
  app.add_flag("--first,!--all", opt.first_only,
               "Report only the first solution (default: all)");
  app.add_option("--format", opt.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> active_words;
  CLI::App* cmd_active =
      app.add_subcommand("active", "Convert an active sentence to passive");
  cmd_active->add_option("sentence", active_words, "Sentence");
  cmd_active->fallthrough();

  std::vector<std::string> passive_words;
  CLI::App* cmd_passive =
      app.add_subcommand("passive", "Convert a passive sentence to active");
  cmd_passive->add_option("sentence", passive_words, "Sentence");
  cmd_passive->fallthrough();

  std::size_t limit = 100;
  voice::EnumerationBounds bounds;
  std::vector<std::string> tense_names;
  CLI::App* cmd_enum = app.add_subcommand(
      "enumerate", "Generate active/passive pairs from the lexicon");
  cmd_enum->add_option("--limit", limit, "Maximum number of pairs")
      ->capture_default_str();
  cmd_enum->add_option("--max-adjectives", bounds.max_adjectives,
                       "Adjectives per noun phrase")
      ->capture_default_str();
  cmd_enum->add_option("--pp-depth", bounds.max_pp_depth,
                       "Prepositional phrase nesting depth")
      ->capture_default_str();
  cmd_enum->add_option("--tense", tense_names,
                       "Restrict to these tenses (repeatable)");
  cmd_enum->add_flag("--include-modals", bounds.include_modals,
                     "Also generate modal sentences");
  cmd_enum->fallthrough();

  std::string which = "all";
  CLI::App* cmd_suite =
      app.add_subcommand("test-suite", "Run the embedded golden test suite");
  cmd_suite->add_option("which", which, "active, passive, or all")
      ->check(CLI::IsMember({"active", "passive", "all"}));
  cmd_suite->fallthrough();

  CLI::App* cmd_repl = app.add_subcommand(
      "repl", "Read 'active: ...' / 'passive: ...' lines from stdin");
  cmd_repl->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_active->parsed()) return run_convert(true, active_words, opt);
    if (cmd_passive->parsed()) return run_convert(false, passive_words, opt);
    if (cmd_enum->parsed()) {
      if (!tense_names.empty()) {
        bounds.tenses.clear();
        for (const std::string& name : tense_names) {
          std::optional<voice::Tense> t = voice::tense_from_name(name);
          if (!t) {
            std::cerr << "error: unknown tense '" << name << "'\n";
            return 2;
          }
          bounds.tenses.push_back(*t);
        }
      }
      return run_enumerate(opt, bounds, limit);
    }
    if (cmd_suite->parsed()) return run_test_suite(opt, which);
    if (cmd_repl->parsed()) return run_repl(opt);
  } catch (const voice::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
