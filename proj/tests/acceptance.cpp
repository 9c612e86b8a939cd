// One PASS/FAIL line per acceptance criterion; exits nonzero when any fails.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "mkw/suites.hpp"

using namespace mkw;

namespace {

struct Run {
  std::string suite;
  std::size_t degree;
};

struct Outcome {
  bool passed = true;
  std::size_t checks = 0, cases = 0;
  std::string first_failure;
  double millis = 0;
};

Outcome run_all(const std::vector<Run>& runs, const SuiteOptions& options) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& r : runs) {
    const SuiteReport report = run_suite(r.suite, r.degree, options);
    o.checks += report.checks.size();
    o.cases += report.cases();
    for (const auto& c : report.checks)
      if (!c.passed && o.passed) {
        o.passed = false;
        o.first_failure = r.suite + ": " + c.name + " [" + c.range + "]" + (c.witness ? ": " + *c.witness : "");
      }
  }
  o.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return o;
}

}  // namespace

int main() {
  SuiteOptions options;
  options.fixture_path = MKW_FIXTURE_PATH;

  struct Criterion {
    const char* title;
    std::vector<Run> runs;
    double budget_ms = 0;  // 0: no time limit
  };
  const std::vector<Criterion> criteria{
      {"worked examples replay exactly", {{"paper-examples", 1}}, 1000},
      {"Hopf axioms, deg <= 5 over {o} and deg <= 4 over {a,b}", {{"hopf-axioms", 5}}},
      {"post-Lie axioms and shift identity, total deg <= 5", {{"post-lie-axioms", 5}}},
      {"∗/Δ and ⊲/ρ dualities, deg <= 5", {{"gl-duality", 5}}},
      {"primitives, natural growth, ⊤-word deconcatenation, f_decompose", {{"natural-growth", 5}, {"primitives", 5}}},
      {"φ morphisms, bijectivity, embedding and Chen identity", {{"phi-iso", 5}}},
      {"cointeraction, co-translation, translations, disjointness",
       {{"cointeraction", 4}, {"cotranslation", 4}, {"translation", 3}, {"disjointness", 4}}},
      {"decorated trees: deformed post-Lie, ⊙, Δ duality, φ_reg", {{"regstruct-postlie", 3}, {"regstruct-phi", 3}}},
  };

  bool all = true;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o = run_all(c.runs, options);
    std::string note;
    if (c.budget_ms > 0 && o.millis >= c.budget_ms) {
      o.passed = false;
      note = " over the time budget";
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << index << " " << c.title << " (" << o.checks << " checks, "
              << o.cases << " cases, " << static_cast<long>(o.millis) << " ms)" << note << "\n";
    if (!o.first_failure.empty()) std::cout << "     " << o.first_failure << "\n";
  }
  return all ? 0 : 1;
}
