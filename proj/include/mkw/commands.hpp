#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "mkw/bck.hpp"
#include "mkw/lincomb.hpp"
#include "mkw/regstruct.hpp"

namespace mkw {

struct Session {
  std::optional<Alphabet> alphabet;  // inferred from the inputs when empty
  std::size_t truncation = 3;        // N for characters, lifts and translations
  std::size_t dimension = 1;         // d for regularity trees
  unsigned max_norm = 2;
  std::size_t degree_cap = 7;
  std::string fixture_path;  // for `verify --suite paper-examples`
};

// Raised when an input or a requested range is larger than the session cap.
class DegreeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plain text is used for outputs that are reports rather than algebra elements.
using CommandValue = std::variant<LinComb, TensorElem, MultiTensor, BckLinComb, BckTensor, RegLinComb, RegTensor, std::string>;

struct CommandOutput {
  CommandValue value;
  nlohmann::json json;
  bool success = true;  // false when a verification reported a failure
  std::string text() const;
};

using CommandOptions = std::map<std::string, std::string>;

// Runs one subcommand. Throws ParseError, DegreeCapError or std::invalid_argument.
CommandOutput run_command(const std::string& name, const std::vector<std::string>& args, const CommandOptions& options,
                          const Session& session);

const std::vector<std::string>& command_names();

// One fixture line: `command arg… [--key value]… => expected`.
struct FixtureCase {
  std::string label;
  std::string command;
  std::vector<std::string> args;
  CommandOptions options;
  std::string expected;
};
FixtureCase parse_fixture_line(const std::string& line);

struct ReplayOutcome {
  bool matched = false;
  std::string actual;
  std::string expected;  // in canonical form
};
// Runs the command and compares with the expectation parsed in the same domain.
ReplayOutcome replay(const FixtureCase& fixture, std::size_t degree_cap);

// Splits on whitespace; double quotes group.
std::vector<std::string> split_words(const std::string& text);

}  // namespace mkw
