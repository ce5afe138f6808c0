#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffrest/poly.hpp"

namespace diffrest::cli {

// Process exit codes.
inline constexpr int kSuccess = 0;   // success, equal, pass
inline constexpr int kNegative = 1;  // not equal, false, fail
inline constexpr int kUsage = 2;     // bad arguments or unparsable input
inline constexpr int kInternal = 3;  // a library invariant broke

// Global state of one invocation: ring, output format and named literals.
struct Session {
  CoeffRing ring = CoeffRing::Integers;
  bool json = false;
  std::map<std::string, std::string> bindings;

  // A bound name expands to its literal; anything else is taken as a literal.
  const std::string& resolve(const std::string& operand) const;
};

struct CheckRequest {
  std::string model;
  std::vector<std::string> suites;
  std::size_t cases = 100;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::optional<std::string> axiom;
  std::string rig = "all";
};

// Runs the axiom suites; the exit code is kSuccess iff every suite passed.
int run_check(const Session& session, const CheckRequest& request, std::ostream& out);

// Full command line without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffrest::cli
