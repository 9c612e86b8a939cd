#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace mkw {

struct CheckResult {
  CheckResult() = default;
  CheckResult(std::string name_, std::string range_) : name(std::move(name_)), range(std::move(range_)) {}

  std::string name;
  std::string range;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<std::string> witness;

  // Records one case; keeps the first failure as the witness.
  void record(bool ok, const std::string& describe_failure = {});
  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      witness = describe();
    }
  }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t cases() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace mkw
