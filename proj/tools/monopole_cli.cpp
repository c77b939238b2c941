// monopole: runs the verification suites and prints star-product coefficient tables.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "monopole/checks.hpp"
#include "monopole/errors.hpp"
#include "monopole/kgraph.hpp"
#include "monopole/star.hpp"

namespace {

using monopole::CheckParams;
using monopole::CheckReport;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void print_report(const CheckReport& r, const std::string& format, bool timing) {
  if (format == "json") {
    ordered_json j;
    j["check"] = r.name;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["parameters"] = params;
    ordered_json res = ordered_json::array();
    for (const auto& [label, value] : r.residuals) res.push_back({{"label", label}, {"value", value}});
    j["residuals"] = res;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    j["seed"] = r.seed;
    if (timing) j["wall_time"] = r.wall_time;
    std::cout << j.dump() << '\n';
    return;
  }
  fmt::print("check      {}\n", r.name);
  for (const auto& [k, v] : r.params) fmt::print("  {:<12} {}\n", k, v);
  fmt::print("seed       {}\n", r.seed);
  fmt::print("tolerance  {}\n", r.tolerance);
  for (const auto& [label, value] : r.residuals)
    fmt::print("  [{}] {:<24} {}\n", value <= r.tolerance ? "ok  " : "FAIL", fmt::format("{}", value), label);
  fmt::print("wall time  {:.3f} s\n", r.wall_time);
  fmt::print("result     {}\n", r.pass ? "PASS" : "FAIL");
}

std::string index_string(const monopole::MultiIndex& m) {
  return fmt::format("{}{}{}|{}{}{}", m[0], m[1], m[2], m[3], m[4], m[5]);
}

void print_expansion(const monopole::StarExpansion& e, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["t"] = e.t;
    j["x0"] = {e.x0[0], e.x0[1], e.x0[2]};
    j["order"] = e.order;
    ordered_json terms = ordered_json::array();
    for (const auto& term : e.terms) {
      const auto c = term.coeff.value();
      terms.push_back({{"grade", term.grade},
                       {"left", std::vector<int>(term.left.begin(), term.left.end())},
                       {"right", std::vector<int>(term.right.begin(), term.right.end())},
                       {"re", c.real()},
                       {"im", c.imag()}});
    }
    j["terms"] = terms;
    std::cout << j.dump() << '\n';
    return;
  }
  fmt::print("t = {}, x0 = ({}, {}, {}), terms = {}\n", e.t, e.x0[0], e.x0[1], e.x0[2], e.terms.size());
  fmt::print("{:>5}  {:>7}  {:>7}  {:>24}  {:>24}\n", "grade", "left", "right", "re", "im");
  for (const auto& term : e.terms) {
    const auto c = term.coeff.value();
    fmt::print("{:>5}  {:>7}  {:>7}  {:>24}  {:>24}\n", term.grade, index_string(term.left), index_string(term.right),
               fmt::format("{}", c.real()), fmt::format("{}", c.imag()));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Charge-monopole quantization checks"};
  app.require_subcommand(1);

  CheckParams params;
  std::optional<int> n;
  std::optional<double> eg, t, tol;
  std::optional<int> trials;
  std::string format = "table";
  bool timing = false;

  auto add_physics = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "monopole index (eg = n hbar / 2)");
    cmd->add_option("--eg", eg, "raw product e*g (unquantized mode)");
    cmd->add_option("--hbar", params.hbar, "Planck constant")->capture_default_str();
    cmd->add_option("--order", params.order, "highest hbar grade (1..3)")->capture_default_str();
    cmd->add_flag("--constant-beta", params.constant_beta, "freeze beta at the base point");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
  };

  auto* run = app.add_subcommand("run", "run a named verification suite");
  std::string check;
  run->add_option("check", check, "suite name")->required();
  add_physics(run);
  run->add_option("--t", t, "ordering parameter (default: 0, 0.3, 0.5, 1)");
  run->add_option("--trials", trials, "number of random trials");
  run->add_option("--seed", params.seed, "root seed")->capture_default_str();
  run->add_option("--tol", tol, "pass tolerance");
  run->add_option("--steps", params.steps, "path-ordering steps")->capture_default_str();
  run->add_option("--nodes", params.nodes, "Gauss nodes per segment")->capture_default_str();
  run->add_option("--rmin", params.rmin, "origin exclusion radius")->capture_default_str();
  run->add_flag("--timing", timing, "include wall time in json output");

  auto* expand = app.add_subcommand("expand", "print the bidifferential terms of the star product");
  double expand_t = 0.5;
  std::vector<double> x0{0.0, 0.0, 1.0};
  std::string route = "flux";
  add_physics(expand);
  expand->add_option("--t", expand_t, "ordering parameter")->capture_default_str();
  expand->add_option("--x0", x0, "base point")->expected(3)->delimiter(',');
  expand->add_option("--route", route, "construction")
      ->check(CLI::IsMember({"flux", "zassenhaus", "graphs"}))
      ->capture_default_str();

  auto* list = app.add_subcommand("list", "list suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  params.n = n;
  params.eg = eg;
  params.t = t;
  params.tol = tol;
  params.trials = trials;

  if (list->parsed()) {
    for (const auto& name : monopole::check_names()) fmt::print("{}\n", name);
    return kExitPass;
  }

  try {
    if (run->parsed()) {
      const CheckReport report = monopole::run_check(check, params);
      print_report(report, format, timing);
      return report.pass ? kExitPass : kExitFail;
    }
    if (n && eg) throw std::invalid_argument("--n and --eg are mutually exclusive");
    const auto cfg = eg ? monopole::MonopoleConfig::unquantized(*eg, params.hbar)
                        : monopole::MonopoleConfig::quantized(n.value_or(1), params.hbar);
    const monopole::Vec3 x{x0[0], x0[1], x0[2]};
    const monopole::ExponentParams p{x, params.order, params.order + 2, params.constant_beta};
    monopole::StarExpansion e;
    if (route == "graphs") {
      if (expand_t != 0.5) throw std::invalid_argument("--route graphs needs --t 0.5");
      if (params.order != 3) throw std::invalid_argument("--route graphs needs --order 3");
      e = monopole::kontsevich_expansion(x, cfg, p.jet_order, params.constant_beta);
    } else {
      e = monopole::star_expansion(
          expand_t, p, cfg, route == "flux" ? monopole::ExponentRoute::Flux : monopole::ExponentRoute::Zassenhaus);
    }
    print_expansion(e, format);
    return kExitPass;
  } catch (const monopole::DomainError& e) {
    fmt::print(stderr, "domain error: {}\n", e.what());
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "usage error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitFail;
  }
}
