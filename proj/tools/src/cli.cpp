#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "diffrest/classical.hpp"
#include "diffrest/errors.hpp"
#include "diffrest/fraction.hpp"
#include "diffrest/join_completion.hpp"
#include "diffrest/parse.hpp"
#include "diffrest/rat_model.hpp"
#include "diffrest/ratmap.hpp"
#include "diffrest/rigs.hpp"

namespace diffrest::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json map_json(const RatMap& f) {
  json components = json::array();
  for (const auto& c : f.components()) components.push_back({{"num", c.num.str()}, {"den", c.den.str()}});
  json gens = json::array();
  for (const auto& g : f.gens()) gens.push_back(g.str());
  return {{"ring", std::string(ring_name(f.ring()))},
          {"n", f.n()},
          {"m", f.m()},
          {"components", components},
          {"gens", gens}};
}

using JnRat = JnModel<RatModel>;
using ClJnRat = ClModel<JnRat>;

json jn_json(const JnRat::Map& f) {
  json gens = json::array();
  for (const auto& g : f.gens) gens.push_back(map_json(g));
  return {{"n", f.dom}, {"m", f.cod}, {"generators", gens}};
}

json cl_json(const ClJnRat& cl, const ClJnRat::Map& x) {
  json pieces = json::array();
  for (const auto& p : x.pieces) pieces.push_back({{"f", jn_json(p.f)}, {"fprime", jn_json(p.fprime)}});
  return {{"n", x.dom}, {"m", x.cod}, {"pieces", pieces}, {"text", cl.show(x)}};
}

// Shared output conventions of the subcommands.
class Printer {
 public:
  Printer(const Session& s, std::string command, std::ostream& out) : s_(s), command_(std::move(command)), out_(out) {}

  int map(const RatMap& f) {
    if (s_.json)
      emit({{"result", map_json(f)}});
    else
      out_ << f.str() << '\n';
    return kSuccess;
  }

  int boolean(bool value) {
    if (s_.json)
      emit({{"result", value}});
    else
      out_ << (value ? "true" : "false") << '\n';
    return value ? kSuccess : kNegative;
  }

  void emit(json body) {
    body["command"] = command_;
    out_ << body.dump() << '\n';
  }

  std::ostream& text() { return out_; }
  bool json_mode() const { return s_.json; }

 private:
  const Session& s_;
  std::string command_;
  std::ostream& out_;
};

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> point;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
    if (item.empty()) throw UsageError("empty coordinate in point '" + text + "'");
    try {
      Rational q(item);
      q.canonicalize();
      point.push_back(q);
    } catch (const std::invalid_argument&) {
      throw UsageError("not a rational number: '" + item + "'");
    }
  }
  return point;
}

std::string show_values(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].get_str();
  return out + ")";
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("DIFFREST_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("DIFFREST_SEED is not an unsigned integer: ") + env);
  }
}

void add_binding(Session& s, const std::string& spec) {
  static const std::regex shape(R"(([A-Za-z_][A-Za-z0-9_]*)\s*=\s*([\s\S]+))");
  std::smatch m;
  if (!std::regex_match(spec, m, shape)) throw UsageError("--bind expects NAME=LITERAL, got '" + spec + "'");
  if (!s.bindings.emplace(m[1].str(), m[2].str()).second)
    throw UsageError("name '" + m[1].str() + "' is already bound");
}

}  // namespace

const std::string& Session::resolve(const std::string& operand) const {
  const auto it = bindings.find(operand);
  return it == bindings.end() ? operand : it->second;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential restriction categories of rational maps: algebra, decisions and axiom suites",
               "diffrest"};
  app.require_subcommand(1);
  app.fallthrough();

  Session session;
  std::string ring = "Z";
  std::vector<std::string> binds;
  app.add_option("--ring", ring, "coefficient ring")->check(CLI::IsMember({"Z", "Q"}));
  app.add_flag("--json", session.json, "machine readable output");
  app.add_option("--bind", binds, "NAME=LITERAL; operands may then refer to NAME")
      ->allow_extra_args(false)
      ->take_all();

  std::function<int(std::ostream&)> action;
  auto load = [&](const std::string& operand) { return parse_map(session.resolve(operand), session.ring); };

  // f, g operand pairs
  std::string a_text, b_text;
  auto binary = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("f", a_text, "first map")->required();
    sub->add_option("g", b_text, "second map")->required();
    return sub;
  };
  auto unary = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("f", a_text, "map")->required();
    return sub;
  };

  binary("compose", "f then g")->final_callback([&] {
    action = [&](std::ostream& o) { return Printer(session, "compose", o).map(rat::compose(load(a_text), load(b_text))); };
  });
  binary("pair", "<f, g>")->final_callback([&] {
    action = [&](std::ostream& o) { return Printer(session, "pair", o).map(rat::pair(load(a_text), load(b_text))); };
  });
  binary("add", "f + g")->final_callback([&] {
    action = [&](std::ostream& o) { return Printer(session, "add", o).map(rat::add(load(a_text), load(b_text))); };
  });
  unary("diff", "the differential D[f]")->final_callback([&] {
    action = [&](std::ostream& o) { return Printer(session, "diff", o).map(rat::differential(load(a_text))); };
  });
  unary("restrict", "the restriction idempotent of f")->final_callback([&] {
    action = [&](std::ostream& o) { return Printer(session, "restrict", o).map(rat::restriction(load(a_text))); };
  });

  for (const char* name : {"eq", "leq", "compat"}) {
    const std::string cmd = name;
    binary(name, cmd == "eq" ? "f = g" : cmd == "leq" ? "f <= g in the restriction order" : "f and g are compatible")
        ->final_callback([&, cmd] {
          action = [&, cmd](std::ostream& o) {
            const auto f = load(a_text), g = load(b_text);
            const bool v = cmd == "eq" ? rat::equal(f, g) : cmd == "leq" ? rat::leq(f, g) : rat::compat(f, g);
            return Printer(session, cmd, o).boolean(v);
          };
        });
  }

  unary("linear", "D[f] is compatible with pi0 f")->final_callback([&] {
    action = [&](std::ostream& o) { return Printer(session, "linear", o).boolean(rat::is_linear(load(a_text))); };
  });
  unary("additive", "additive and strongly additive tests")->final_callback([&] {
    action = [&](std::ostream& o) {
      const auto f = load(a_text);
      const bool additive = rat::is_additive(f), strong = rat::is_strongly_additive(f);
      Printer p(session, "additive", o);
      if (p.json_mode())
        p.emit({{"result", additive}, {"strongly_additive", strong}});
      else
        o << "additive: " << (additive ? "true" : "false") << "\nstrongly additive: " << (strong ? "true" : "false")
          << '\n';
      return additive ? kSuccess : kNegative;
    };
  });

  std::string at;
  auto* eval = unary("eval", "evaluate f at a rational point");
  eval->add_option("--at", at, "comma separated coordinates, e.g. 1,0,1/2")->required();
  eval->final_callback([&] {
    action = [&](std::ostream& o) {
      const auto values = rat::eval(load(a_text), parse_point(at));
      Printer p(session, "eval", o);
      if (p.json_mode()) {
        json result = nullptr;
        if (values) {
          result = json::array();
          for (const auto& v : *values) result.push_back(v.get_str());
        }
        p.emit({{"result", result}, {"defined", values.has_value()}});
      } else {
        o << (values ? show_values(*values) : std::string("undefined")) << '\n';
      }
      return kSuccess;
    };
  });

  auto* normalize = app.add_subcommand("normalize", "canonical form of a map literal or of a fraction");
  normalize->add_option("literal", a_text, "map literal, or a fraction such as 18/36")->required();
  normalize->final_callback([&] {
    action = [&](std::ostream& o) {
      const std::string& text = session.resolve(a_text);
      if (text.find("map") != std::string::npos) return Printer(session, "normalize", o).map(parse_map(text, session.ring));
      const RatFrac x = parse_frac(text, session.ring);
      const std::size_t nvars = std::max(x.num.nvars(), x.den.nvars());
      const PolyRig rig(session.ring, nvars);
      const auto r = reduce_canonical(rig, RatFrac{x.num.with_nvars(nvars), x.den.with_nvars(nvars)});
      Printer p(session, "normalize", o);
      if (p.json_mode())
        p.emit({{"result", {{"num", r.num.str()}, {"den", r.den.str()}}}});
      else
        o << "(" << r.num.str() << ", " << r.den.str() << ")\n";
      return kSuccess;
    };
  });

  std::string probe;
  auto* join = binary("join-candidate", "the order-theoretic candidate join of compatible f and g");
  join->add_option("--probe", probe, "map s; reports whether s(f v g) = sf v sg");
  join->final_callback([&] {
    action = [&](std::ostream& o) {
      std::optional<RatMap> s;
      if (!probe.empty()) s = load(probe);
      const auto result = rat::candidate_join(load(a_text), load(b_text), s);
      Printer p(session, "join-candidate", o);
      if (p.json_mode()) {
        json body{{"result", map_json(result.candidate)}};
        if (result.stable) {
          body["probe_of_join"] = map_json(*result.probe_of_join);
          body["join_of_probes"] = map_json(*result.join_of_probes);
          body["stable"] = *result.stable;
        }
        p.emit(body);
      } else {
        o << "candidate: " << result.candidate.str() << '\n';
        if (result.stable)
          o << "probe of join: " << result.probe_of_join->str() << '\n'
            << "join of probes: " << result.join_of_probes->str() << '\n'
            << "stable: " << (*result.stable ? "true" : "false") << '\n';
      }
      return result.stable.value_or(true) ? kSuccess : kNegative;
    };
  });

  std::string along;
  auto* complement = binary("complement", "relative complement f minus g in Cl(Jn(Rat)); needs g <= f");
  complement->add_option("--along", along,
                         "restriction idempotent e; also compares the result with its restriction to e");
  complement->final_callback([&] {
    action = [&](std::ostream& o) {
      const JnRat jn{RatModel(session.ring)};
      const ClJnRat cl(jn);
      const auto lift = [&](const RatMap& f) { return cl.of_base(jn.of_base(f)); };
      const auto result = cl.complement(lift(load(a_text)), lift(load(b_text)));
      Printer p(session, "complement", o);
      if (along.empty()) {
        if (p.json_mode())
          p.emit({{"result", cl_json(cl, result)}});
        else
          o << cl.show(result) << '\n';
        return kSuccess;
      }
      const RatMap e = load(along);
      if (!rat::equal(e, rat::restriction(e))) throw UsageError("--along needs a restriction idempotent");
      const auto restricted = cl.compose(lift(e), result);
      const Verdict v = cl.equal(result, restricted);
      if (p.json_mode())
        p.emit({{"result", cl_json(cl, result)},
                {"restricted", cl_json(cl, restricted)},
                {"verdict", std::string(to_string(v))}});
      else
        o << cl.show(result) << "\nrestricted: " << cl.show(restricted) << "\nverdict: " << to_string(v) << '\n';
      return v == Verdict::equal ? kSuccess : kNegative;
    };
  });

  CheckRequest check;
  std::string suites;
  auto* check_cmd = app.add_subcommand("check", "run axiom suites on seeded or exhaustive samples");
  check_cmd->add_option("--model", check.model, "model to test")
      ->required()
      ->check(CLI::IsMember({"rat", "finpar", "jn-rat", "cl-finpar", "cl-jn-rat", "frac"}));
  check_cmd->add_option("--suite", suites, "suite name, or a comma separated list")->required();
  check_cmd->add_option("--cases", check.cases, "cases per axiom")->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", check.seed, "base seed; DIFFREST_SEED takes precedence");
  check_cmd->add_flag("--exhaustive", check.exhaustive, "enumerate every instance (finite models)");
  check_cmd->add_option("--axiom", check.axiom, "run only the axiom with this id");
  check_cmd->add_option("--rig", check.rig, "frac model: rig of coefficients")
      ->check(CLI::IsMember({"all", "Z", "N", "Q", "Zx", "Qx"}));
  check_cmd->final_callback([&] {
    action = [&](std::ostream& o) {
      std::stringstream list(suites);
      std::string item;
      while (std::getline(list, item, ','))
        if (!item.empty()) check.suites.push_back(item);
      check.seed = seed_from_env(check.seed);
      return run_check(session, check, o);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    session.ring = ring == "Q" ? CoeffRing::Rationals : CoeffRing::Integers;
    for (const auto& b : binds) add_binding(session, b);
    return action(out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace diffrest::cli
