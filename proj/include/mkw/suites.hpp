#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mkw/forest.hpp"
#include "mkw/report.hpp"

namespace mkw {

struct SuiteOptions {
  // Overrides the default alphabets ({o} at max_degree, {a,b} one degree lower).
  std::optional<Alphabet> alphabet;
  std::size_t degree_cap = 7;
  std::string fixture_path;  // paper-examples only
};

const std::vector<std::string>& suite_names();
std::size_t default_max_degree(const std::string& suite);

// Throws std::invalid_argument for an unknown suite and std::out_of_range when
// max_degree exceeds the cap.
SuiteReport run_suite(const std::string& suite, std::size_t max_degree, const SuiteOptions& options = {});

// MKW_DEGREE_CAP, or 7 when unset.
std::size_t degree_cap_from_env();

}  // namespace mkw
