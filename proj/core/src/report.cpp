#include "diffrest/report.hpp"

#include <sstream>

namespace diffrest {

std::string SuiteReport::summary() const {
  std::ostringstream out;
  out << suite << " on " << model << ": " << cases << " cases, " << failures.size() << " failures, seed " << seed << ", "
      << static_cast<long long>(runtime_ms) << " ms";
  for (const auto& f : failures) {
    out << "\n  [" << f.axiom << "] case " << f.case_index << " (" << f.verdict << ")";
    for (const auto& [name, value] : f.inputs) out << "\n    " << name << " = " << value;
    out << "\n    lhs = " << f.lhs << "\n    rhs = " << f.rhs;
  }
  return out.str();
}

}  // namespace diffrest
