#include <json.hpp>

#include <ostream>
#include <vector>

#include "cli.hpp"
#include "diffrest/classical.hpp"
#include "diffrest/finpar_model.hpp"
#include "diffrest/fraction_laws.hpp"
#include "diffrest/join_completion.hpp"
#include "diffrest/rat_model.hpp"
#include "diffrest/rigs.hpp"
#include "diffrest/suites.hpp"

namespace diffrest::cli {

namespace {

nlohmann::json report_json(const SuiteReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [name, value] : f.inputs) inputs[name] = value;
    failures.push_back({{"axiom", f.axiom},
                        {"case", f.case_index},
                        {"verdict", f.verdict},
                        {"lhs", f.lhs},
                        {"rhs", f.rhs},
                        {"inputs", inputs}});
  }
  return {{"suite", r.suite},   {"model", r.model},         {"seed", r.seed},
          {"cases", r.cases},   {"passed", r.passed()},     {"runtime_ms", r.runtime_ms},
          {"failures", failures}};
}

template <class M>
std::vector<SuiteReport> run_model(const M& model, const CheckRequest& req) {
  SuiteOptions opt;
  opt.cases = req.cases;
  opt.seed = req.seed;
  opt.exhaustive = req.exhaustive;
  opt.only = req.axiom;
  std::vector<SuiteReport> out;
  for (const auto& suite : req.suites) out.push_back(check_suite(model, suite, opt));
  return out;
}

template <class Rig>
void run_fraction(const Rig& rig, const CheckRequest& req, std::vector<SuiteReport>& out) {
  for (const auto& suite : req.suites) out.push_back(check_fraction_suite(rig, suite, req.cases, req.seed));
}

std::vector<SuiteReport> dispatch(const Session& session, const CheckRequest& req) {
  if (req.exhaustive && req.model != "finpar" && req.model != "cl-finpar")
    throw Unsupported("--exhaustive needs a finite model (finpar or cl-finpar)");
  if (req.model == "frac") {
    if (req.axiom) throw Unsupported("--axiom is not available for fraction law suites");
    std::vector<SuiteReport> out;
    const bool all = req.rig == "all";
    if (all || req.rig == "Z") run_fraction(IntegerRig{}, req, out);
    if (all || req.rig == "N") run_fraction(NaturalRig{}, req, out);
    if (req.rig == "Q") run_fraction(RationalRig{}, req, out);
    if (req.rig == "Zx") run_fraction(PolyRig(CoeffRing::Integers, 1), req, out);
    if (all || req.rig == "Qx") run_fraction(PolyRig(CoeffRing::Rationals, 1), req, out);
    return out;
  }
  const RatModel rat(session.ring);
  if (req.model == "rat") return run_model(rat, req);
  if (req.model == "jn-rat") return run_model(JnModel<RatModel>(rat), req);
  if (req.model == "cl-jn-rat") return run_model(ClModel<JnModel<RatModel>>(JnModel<RatModel>(rat)), req);
  if (req.model == "finpar") return run_model(FinparModel(3), req);
  if (req.model == "cl-finpar") return run_model(ClModel<FinparModel>(FinparModel(3)), req);
  throw Unsupported("unknown model " + req.model);
}

}  // namespace

int run_check(const Session& session, const CheckRequest& request, std::ostream& out) {
  const auto reports = dispatch(session, request);
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (session.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    out << nlohmann::json{{"command", "check"}, {"passed", passed}, {"reports", list}}.dump() << '\n';
  } else {
    for (const auto& r : reports) out << r.summary() << '\n';
    out << (passed ? "PASS" : "FAIL") << '\n';
  }
  return passed ? kSuccess : kNegative;
}

}  // namespace diffrest::cli
