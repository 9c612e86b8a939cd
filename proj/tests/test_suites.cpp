#include "doctest.h"
#include "mkw/suites.hpp"

using namespace mkw;

namespace {
const char* const kMorphism = "φ_reg(A∗B) = φ_reg(A)⊙φ_reg(B)";
}

TEST_CASE("every suite passes at a reduced degree, apart from the impossible morphism") {
  SuiteOptions options;
  options.fixture_path = MKW_FIXTURE_PATH;
  for (const auto& name : suite_names()) {
    const std::size_t n = std::min<std::size_t>(default_max_degree(name), 3);
    const SuiteReport report = run_suite(name, n, options);
    CHECK_FALSE(report.checks.empty());
    for (const auto& c : report.checks) {
      if (c.name == kMorphism) {
        CHECK_FALSE(c.passed);
        CHECK(c.witness.has_value());
        continue;
      }
      CHECK_MESSAGE(c.passed, name << ": " << c.name << " " << c.witness.value_or(""));
      CHECK(c.cases > 0);
    }
  }
}

TEST_CASE("suite errors") {
  CHECK_THROWS_AS(run_suite("nope", 2), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("hopf-axioms", 8), std::out_of_range);
}

TEST_CASE("a forced alphabet replaces the default ranges") {
  SuiteOptions options;
  options.alphabet = Alphabet{"x"};
  const auto report = run_suite("hopf-axioms", 3, options);
  CHECK(report.passed());
  for (const auto& c : report.checks) CHECK(c.range.find("{x}") != std::string::npos);
}
