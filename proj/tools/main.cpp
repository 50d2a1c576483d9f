#include "report.hpp"

#include "polyopt/errors.hpp"
#include "polyopt/kkt.hpp"
#include "polyopt/polar.hpp"
#include "polyopt/semialg.hpp"
#include "polyopt/system.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using report::ordered_json;

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::uint64_t seed = 0;
  int precision = 12;
  std::size_t retries = 5;
  std::optional<std::size_t> max_active;
  bool relaxed_subsets = false;
  bool check_regularity = false;
  bool pretty = false;
  std::string problem = "sample";
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

polyopt::ParsedSystem load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return polyopt::parse_system(buffer.str());
}

polyopt::OptimizationProblem optimization(const polyopt::ParsedSystem& sys) {
  if (!sys.objective) throw InputError("this command needs a minimize: line");
  return {*sys.objective, sys.equations};
}

std::vector<polyopt::MultiPoly> sign_polynomials(const polyopt::ParsedSystem& sys) {
  if (!sys.poly_mode()) throw InputError("this command needs poly: lines");
  return sys.sign_polynomials;
}

struct Verifier {
  bool enabled = false;
  std::size_t checked = 0;
  std::size_t failed = 0;

  void check(bool ok) {
    if (!enabled) return;
    ++checked;
    if (!ok) ++failed;
  }
  bool zero_on(std::span<const polyopt::MultiPoly> fs, const polyopt::AlgebraicPoint& x) const {
    for (const auto& f : fs)
      if (polyopt::sign_of(f, x) != 0) return false;
    return true;
  }
};

ordered_json execute(const RunConfig& cfg, Verifier& verify, ordered_json& diagnostics) {
  const auto sys = load(cfg.input);
  const std::size_t n = sys.num_variables();
  const int digits = cfg.precision;
  if (cfg.command == "sample-points") {
    if (sys.equations.empty()) throw InputError("sample-points needs eq: lines");
    polyopt::SampleOptions opts;
    opts.seed = cfg.seed;
    opts.retries = cfg.retries;
    const auto points = polyopt::sample_points_closed(sys.equations, opts);
    ordered_json out = ordered_json::array();
    for (const auto& x : points) {
      verify.check(verify.zero_on(sys.equations, x) && polyopt::is_regular_point(sys.equations, x));
      out.push_back(report::point(x, n, digits));
    }
    return out;
  }
  if (cfg.command == "sign-conditions") {
    const auto fs = sign_polynomials(sys);
    polyopt::SignOptions opts;
    opts.seed = cfg.seed;
    opts.retries = cfg.retries;
    opts.relaxed_subsets = cfg.relaxed_subsets;
    const std::size_t p = cfg.max_active.value_or(std::min(fs.size(), n));
    const auto reports = polyopt::consistent_conditions(fs, p, opts);
    ordered_json out = ordered_json::array();
    for (const auto& r : reports) {
      bool ok = true;
      if (verify.enabled) {
        std::vector<polyopt::MultiPoly> active;
        for (std::size_t j = 0; j < fs.size(); ++j) {
          ok = ok && polyopt::sign_of(fs[j], r.witness) == r.condition.epsilons[j];
          if (r.condition.epsilons[j] == 0) active.push_back(fs[j].extended(r.witness.num_variables()));
        }
        ok = ok && polyopt::is_regular_point(active, r.witness);
      }
      verify.check(ok);
      out.push_back(report::sample_report(r, n, digits));
    }
    return out;
  }
  if (cfg.command == "local-min") {
    const auto prob = optimization(sys);
    polyopt::KktOptions opts{cfg.seed, cfg.retries};
    const auto res = polyopt::local_minima(prob, opts);
    ordered_json out = ordered_json::array();
    for (const auto* list : {&res.minima, &res.rejected})
      for (const auto& c : *list) {
        verify.check(verify.zero_on(prob.constraints, c.point) && c.value == polyopt::value_of(prob.objective, c.point));
        out.push_back(report::critical_point(c, n, digits));
      }
    for (const auto& d : res.diagnostics) {
      auto j = report::diagnostic(d.kind.c_str(), d.message);
      ordered_json chart = ordered_json::array();
      for (auto c : d.chart) chart.push_back(c + 1);
      j["chart"] = chart;
      diagnostics.push_back(j);
    }
    return out;
  }
  if (cfg.command == "global-min") {
    const auto prob = optimization(sys);
    polyopt::KktOptions opts{cfg.seed, cfg.retries};
    const auto g = polyopt::global_minimum(prob, opts);
    for (const auto& x : g.minimizers)
      verify.check(verify.zero_on(prob.constraints, x) && polyopt::value_of(prob.objective, x) == g.value);
    return report::global_minimum(g, n, digits);
  }
  if (cfg.command == "degree") {
    polyopt::KktOptions kopts{cfg.seed, cfg.retries};
    if (cfg.problem == "sample") {
      const auto fs = sys.poly_mode() ? sys.sign_polynomials : sys.equations;
      if (fs.empty()) throw InputError("degree --problem sample needs poly: or eq: lines");
      polyopt::SignOptions opts;
      opts.seed = cfg.seed;
      opts.retries = cfg.retries;
      opts.relaxed_subsets = cfg.relaxed_subsets;
      const std::size_t p = cfg.max_active.value_or(std::min(fs.size(), n));
      return report::degree(polyopt::sample_degree(fs, p, opts));
    }
    const auto prob = optimization(sys);
    if (cfg.problem == "local") return report::degree(polyopt::local_degree(prob, kopts));
    return report::degree(polyopt::global_degree(prob, kopts));
  }
  throw InputError("unknown command " + cfg.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact real sample points, sign conditions and polynomial optimization"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool json = false;
  const std::pair<const char*, const char*> commands[] = {
      {"sample-points", "one real point on every connected component of the zero set"},
      {"sign-conditions", "realizable sign conditions with a witness each"},
      {"local-min", "isolated local minimizers on the constraint set"},
      {"global-min", "global infimum value and minimizers"},
      {"degree", "sample-set degree and its Bezout bound"},
  };
  for (const auto& [name, about] : commands) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("input", cfg.input, "input system file")->required();
    sub->add_option("--seed", cfg.seed, "seed for every random choice");
    sub->add_option("--precision", cfg.precision, "decimal digits of approximations")->check(CLI::Range(0, 1000));
    sub->add_option("--retries", cfg.retries, "retry budget for random choices");
    sub->add_flag("--check-regularity", cfg.check_regularity, "re-verify every reported point");
    auto* j = sub->add_flag("--json", json, "compact JSON output (default)");
    auto* p = sub->add_flag("--pretty", cfg.pretty, "indented JSON output");
    j->excludes(p);
    if (std::string(name) == "sign-conditions" || std::string(name) == "degree") {
      sub->add_flag("--relaxed-subsets", cfg.relaxed_subsets, "allow active sets up to n");
      sub->add_option("--max-active", cfg.max_active, "largest active set size p");
    }
    if (std::string(name) == "degree")
      sub->add_option("--problem", cfg.problem, "sample, local or global")
          ->check(CLI::IsMember({"sample", "local", "global"}));
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  ordered_json out;
  out["command"] = cfg.command;
  out["seed"] = cfg.seed;
  ordered_json diagnostics = ordered_json::array();
  Verifier verify;
  verify.enabled = cfg.check_regularity;
  int code = 0;
  try {
    out["result"] = execute(cfg, verify, diagnostics);
  } catch (const polyopt::ParseError& e) {
    out["result"] = nullptr;
    auto d = report::diagnostic(e.kind(), e.what());
    d["line"] = e.line();
    d["column"] = e.column();
    out["error"] = d;
    code = 1;
  } catch (const polyopt::InvalidInput& e) {
    out["result"] = nullptr;
    out["error"] = report::diagnostic(e.kind(), e.what());
    code = 1;
  } catch (const InputError& e) {
    out["result"] = nullptr;
    out["error"] = report::diagnostic("InputError", e.what());
    code = 1;
  } catch (const polyopt::Error& e) {
    out["result"] = nullptr;
    diagnostics.push_back(report::diagnostic(e.kind(), e.what()));
  }
  if (verify.enabled) {
    ordered_json v;
    v["checked"] = verify.checked;
    v["failed"] = verify.failed;
    out["verification"] = v;
    if (verify.failed > 0) diagnostics.push_back(report::diagnostic("VerificationFailure", "a reported point failed re-verification"));
  }
  out["diagnostics"] = diagnostics;
  if (code == 0 && !diagnostics.empty()) code = 2;
  std::cout << (cfg.pretty ? out.dump(2) : out.dump()) << '\n';
  if (code == 1) std::cerr << "error: " << out["error"]["message"].get<std::string>() << '\n';
  return code;
}
