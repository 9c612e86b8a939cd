#include "mkw/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mkw/commands.hpp"
#include "mkw/suites.hpp"

#ifndef MKW_FIXTURE_PATH
#define MKW_FIXTURE_PATH "data/paper_examples.txt"
#endif

namespace mkw {

namespace {

struct OptionSpec {
  const char* name;
  const char* help;
};

struct CommandSpec {
  const char* name;
  const char* help;
  std::vector<OptionSpec> options;
};

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs{
      {"graft", "left grafting A ⊲ B", {}},
      {"gl-product", "Grossman–Larson product A ∗ B ∗ …", {}},
      {"shuffle", "shuffle product A ⧢ B ⧢ …", {}},
      {"concat", "concatenation A · B · …", {}},
      {"eval", "evaluate an expression (⧢ ⊲ ∗ · ⊤ ⊗)", {}},
      {"mkw-coproduct", "Δ_MKW X", {}},
      {"reduced-coproduct", "Δ̂ X", {}},
      {"deshuffle", "Δ⧢ X", {}},
      {"antipode", "antipode of X", {{"which", "mkw (default), gl or concat"}}},
      {"natural-growth", "A ⊤ B", {}},
      {"pi", "primitive projection π(X)", {}},
      {"f-decompose", "X as Σ F_j(t_j) over primitive tensors", {}},
      {"phi", "φ(X) in the tensor algebra over trees", {}},
      {"phi-inv", "φ⁻¹(X)", {}},
      {"rho-graft", "coaction ρ_⊲(X)", {}},
      {"translate", "T_v(X)", {{"v", "shifts, e.g. \"a=[b];b=1/2*[a]\""}, {"N", "truncation degree"}}},
      {"basis", "forests of one degree", {{"degree", "degree n"}}},
      {"primitives", "basis of the primitives of one degree", {{"degree", "degree n"}}},
      {"lift", "canonical lift exp_∗(Σ c_i [i]) as a series", {{"increments", "e.g. \"a=1/2,b=1\""}, {"N", "truncation"}}},
      {"chen", "lift(X) ∗ lift(Y) for increment lists X, Y", {{"N", "truncation"}}},
      {"embed", "φ applied to a canonical lift", {{"increments", "e.g. \"a=1/2,b=1\""}, {"N", "truncation"}}},
      {"disjointness", "compare exp_∗(X) ⊲ · with the forced translation", {{"N", "truncation"}}},
      {"bck-eval", "evaluate a non-planar expression", {}},
      {"bck-pi", "BCK primitive projection", {}},
      {"bck-coproduct", "BCK coproduct", {}},
      {"bck-antipode", "BCK antipode", {}},
      {"bck-natural-growth", "BCK A ⊤ B", {}},
      {"reg-eval", "evaluate a decorated-tree expression (⊙ ∗ ⊲)", {}},
      {"reg-graft", "extended deformed grafting A ⊲ B", {}},
      {"reg-bracket", "[A, B]_0", {}},
      {"reg-odot", "enveloping product A ⊙ B ⊙ …", {}},
      {"reg-gl-product", "deformed product A ∗ B ∗ …", {}},
      {"reg-raise", "↑^l X", {{"by", "multi-index l, e.g. 1 or 1,0"}}},
      {"reg-lower", "↓^i X", {{"by", "multi-index i"}}},
      {"reg-deshuffle", "Δ⧢ X on decorated trees", {}},
      {"reg-coproduct", "truncated deformed coproduct of X", {{"max-degree", "truncation of the basis"}}},
      {"reg-phi", "φ_reg(X)", {}},
      {"reg-phi-inv", "φ_reg⁻¹(X)", {}},
      {"reg-basis", "decorated trees of one degree", {{"degree", "degree n"}}},
      {"verify", "run a verification suite", {{"suite", "suite name"}, {"max-degree", "largest degree checked"}}},
  };
  return specs;
}

std::optional<Alphabet> alphabet_from(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  std::vector<std::string> letters;
  std::stringstream in(spec);
  for (std::string t; std::getline(in, t, ',');)
    if (!t.empty()) letters.push_back(t);
  if (letters.empty()) throw std::invalid_argument("--alphabet needs at least one letter");
  return Alphabet(letters);
}

std::string suite_list() {
  std::string s;
  for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the MKW Hopf algebra of planar forests"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  std::string alphabet_spec;
  std::size_t dimension = 1;
  unsigned max_norm = 2;
  bool json = false;
  std::string fixtures;
  app.add_option("--alphabet", alphabet_spec, "comma-separated letters; default: letters named in the input");
  app.add_option("--dimension", dimension, "d for decorated trees")->check(CLI::PositiveNumber);
  app.add_option("--max-norm", max_norm, "largest decoration norm for decorated-tree bases");
  app.add_flag("--json", json, "print JSON instead of text");
  app.add_option("--fixtures", fixtures, "fixture file for the paper-examples suite");

  struct Parsed {
    std::vector<std::string> args;
    CommandOptions options;
  };
  std::map<std::string, Parsed> parsed;
  for (const auto& spec : command_specs()) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    auto& slot = parsed[spec.name];
    // Extras keep bracket text verbatim; a declared positional would split "[a,b]"-like values.
    sub->allow_extras();
    for (const auto& opt : spec.options) {
      sub->add_option_function<std::string>(
          std::string("--") + opt.name, [&slot, key = std::string(opt.name)](const std::string& v) { slot.options[key] = v; },
          opt.help);
    }
    if (std::string(spec.name) == "verify") sub->footer("suites: " + suite_list());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  for (auto& extra : chosen->remaining()) {
    if (extra.size() > 2 && extra.rfind("--", 0) == 0) {
      err << "unknown option " << extra << " for " << name << "\n";
      return 2;
    }
    parsed[name].args.push_back(extra);
  }
  Session session;
  session.dimension = dimension;
  session.max_norm = max_norm;
  session.fixture_path = fixtures;
  if (session.fixture_path.empty()) {
    const char* env = std::getenv("MKW_FIXTURES");
    session.fixture_path = env && *env ? env : MKW_FIXTURE_PATH;
  }

  try {
    session.alphabet = alphabet_from(alphabet_spec);
    session.degree_cap = degree_cap_from_env();
    const CommandOutput result = run_command(name, parsed[name].args, parsed[name].options, session);
    if (json) {
      out << result.json.dump(2) << "\n";
    } else {
      out << result.text() << "\n";
    }
    return result.success ? 0 : 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeCapError& e) {
    err << "degree cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mkw
