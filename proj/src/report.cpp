#include "mkw/report.hpp"

#include <algorithm>

namespace mkw {

void CheckResult::record(bool ok, const std::string& describe_failure) {
  check(ok, [&] { return describe_failure; });
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t SuiteReport::cases() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.cases;
  return n;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"name", c.name}, {"range", c.range}, {"status", c.passed ? "pass" : "fail"},
                        {"cases", c.cases}};
    if (c.witness) j["witness"] = *c.witness;
    list.push_back(std::move(j));
  }
  return {{"suite", suite}, {"checks", list}};
}

std::string SuiteReport::to_text() const {
  std::string s;
  for (const auto& c : checks) {
    s += (c.passed ? "PASS " : "FAIL ") + c.name + " [" + c.range + "] cases=" + std::to_string(c.cases) + "\n";
    if (c.witness) s += "  witness: " + *c.witness + "\n";
  }
  s += std::string(passed() ? "PASS" : "FAIL") + " " + suite + ": " + std::to_string(checks.size()) +
       " checks, " + std::to_string(cases()) + " cases\n";
  return s;
}

}  // namespace mkw
