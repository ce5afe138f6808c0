#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace diffrest {

struct Failure {
  std::string axiom;
  std::size_t case_index = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // (name, printed value)
  std::string lhs;
  std::string rhs;
  std::string verdict;  // "distinct", "unknown", or a note for boolean checks
};

struct SuiteReport {
  std::string suite;
  std::string model;
  std::uint64_t seed = 0;
  std::size_t cases = 0;  // axiom instances evaluated
  std::vector<Failure> failures;
  double runtime_ms = 0.0;

  bool passed() const { return failures.empty(); }
  std::string summary() const;
};

}  // namespace diffrest
