#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffrest/errors.hpp"
#include "diffrest/model.hpp"
#include "diffrest/report.hpp"
#include "diffrest/sampler.hpp"

namespace diffrest {

// Collects the inputs of one axiom instance and the outcome of each check made on them.
template <RestrictionModel M>
class Recorder {
 public:
  using Map = typename M::Map;

  explicit Recorder(const M& m) : m_(m) {}

  Map in(const char* name, Map f) {
    inputs_.emplace_back(name, f);
    return f;
  }

  void eq(const Map& lhs, const Map& rhs, std::string_view label = {}) {
    const Verdict v = m_.equal(lhs, rhs);
    if (v != Verdict::equal) fail(label, m_.show(lhs), m_.show(rhs), v);
  }

  void le(const Map& lhs, const Map& rhs, std::string_view label = {}) {
    const Verdict v = leq(m_, lhs, rhs);
    if (v != Verdict::equal) fail(label, m_.show(lhs), "<= " + m_.show(rhs), v);
  }

  void compatible(const Map& lhs, const Map& rhs, std::string_view label = {}) {
    const Verdict v = compat(m_, lhs, rhs);
    if (v != Verdict::equal) fail(label, m_.show(lhs), "~ " + m_.show(rhs), v);
  }

  // A predicate that must come out `equal` (true).
  void holds(Verdict v, std::string_view label) {
    if (v != Verdict::equal) fail(label, std::string(label), "holds", v);
  }

  // Two decisions that must agree (both true or both false, neither unknown).
  void agree(Verdict a, Verdict b, std::string_view label) {
    if (a == Verdict::unknown || b == Verdict::unknown || a != b)
      fail(label, std::string(to_string(a)), std::string(to_string(b)),
           a == Verdict::unknown || b == Verdict::unknown ? Verdict::unknown : Verdict::distinct);
  }

  // Premise of an implication; false premises make the instance vacuous.
  bool given(Verdict v) {
    if (v != Verdict::equal) vacuous_ = true;
    return v == Verdict::equal;
  }

  void error(const std::string& what) { failures_.push_back(Failure{{}, 0, shown_inputs(), what, {}, "error"}); }

  std::vector<Failure> take_failures() { return std::move(failures_); }
  bool vacuous() const { return vacuous_; }

 private:
  void fail(std::string_view label, std::string lhs, std::string rhs, Verdict v) {
    std::string verdict(to_string(v));
    if (!label.empty()) verdict += ": " + std::string(label);
    failures_.push_back(Failure{{}, 0, shown_inputs(), std::move(lhs), std::move(rhs), std::move(verdict)});
  }

  // Inputs are printed only when something fails.
  std::vector<std::pair<std::string, std::string>> shown_inputs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [name, f] : inputs_) out.emplace_back(name, m_.show(f));
    return out;
  }

  const M& m_;
  std::vector<std::pair<const char*, Map>> inputs_;
  std::vector<Failure> failures_;
  bool vacuous_ = false;
};

template <RestrictionModel M>
struct Axiom {
  std::string id;
  std::string statement;
  std::function<void(const M&, Chooser&, Recorder<M>&)> body;
};

// Suites specific to one model family. Specializations provide
//   static std::vector<std::string> names();
//   static std::optional<std::vector<Axiom<M>>> get(std::string_view suite);
template <class M>
struct ModelSuites {};

struct SuiteOptions {
  std::size_t cases = 100;                  // per axiom, random mode
  std::uint64_t seed = 0;
  bool exhaustive = false;                  // enumerate every choice sequence instead
  std::size_t exhaustive_limit = 50000000;  // per axiom
  std::optional<std::string> only;          // run a single axiom by id
};

// Runs every axiom on its own deterministic stream: case i of axiom k draws from
// derive_seed(seed, k, i), so single axioms can be replayed in isolation.
template <RestrictionModel M>
SuiteReport run_axioms(const M& m, std::string suite, const std::vector<Axiom<M>>& axioms, const SuiteOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::move(suite);
  report.model = m.name();
  report.seed = opt.seed;

  auto run_case = [&](const Axiom<M>& axiom, Chooser& chooser, std::size_t index) {
    Recorder<M> rec(m);
    try {
      axiom.body(m, chooser, rec);
    } catch (const InvariantViolation&) {
      throw;
    } catch (const Error& e) {
      rec.error(e.what());
    }
    for (auto& f : rec.take_failures()) {
      f.axiom = axiom.id;
      f.case_index = index;
      report.failures.push_back(std::move(f));
    }
    ++report.cases;
  };

  bool matched = !opt.only.has_value();
  for (std::size_t k = 0; k < axioms.size(); ++k) {
    const auto& axiom = axioms[k];
    if (opt.only && *opt.only != axiom.id) continue;
    matched = true;
    if (opt.exhaustive) {
      EnumeratingChooser chooser;
      std::size_t index = 0;
      do {
        if (index >= opt.exhaustive_limit)
          throw Unsupported("exhaustive run of " + axiom.id + " exceeds " + std::to_string(opt.exhaustive_limit) +
                            " instances");
        run_case(axiom, chooser, index++);
      } while (chooser.advance());
    } else {
      for (std::size_t i = 0; i < opt.cases; ++i) {
        RandomChooser chooser(derive_seed(opt.seed, k, i));
        run_case(axiom, chooser, i);
      }
    }
  }
  if (!matched) throw Unsupported("no axiom named " + *opt.only + " in suite " + report.suite);
  report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace diffrest
