// Command-line front end: geodesic-length experiments on truncated sequence
// spaces. Subcommands: verify-bounds, sweep-detours, optimize, compare.

#include "l2geo/experiment.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

namespace {

struct FlagOverrides {
  std::string config_path;
  int dim = 0;
  int n_max = 0;
  int segments = 0;
  std::string metric;
  std::uint64_t seed = 0;
  std::string out;
  int quad_nodes = 0;
  int quad_panels = 0;
  int max_iters = 0;
  double grad_tol = 0.0;
  std::string p_coords;
  std::string q_coords;
  std::string init;
  int init_n = 0;
  double perturb_scale = 0.0;
};

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> coords;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      coords.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw l2geo::ConfigError("cannot parse coordinate '" + token + "'");
    }
  }
  return coords;
}

void add_common_flags(CLI::App* cmd, FlagOverrides& f) {
  cmd->add_option("--config", f.config_path, "JSON config file; flags override its values");
  cmd->add_option("--dim", f.dim, "truncation dimension D");
  cmd->add_option("--n-max", f.n_max, "detour sweep upper index");
  cmd->add_option("--segments", f.segments, "polyline segment count m");
  cmd->add_option("--metric", f.metric, "metric: weak or euclidean")
      ->check(CLI::IsMember({"weak", "euclidean"}));
  cmd->add_option("--seed", f.seed, "rng seed for perturbation-based inits");
  cmd->add_option("--out", f.out, "output CSV path (default: stdout)");
  cmd->add_option("--quad-nodes", f.quad_nodes, "Gauss-Legendre nodes per panel");
  cmd->add_option("--quad-panels", f.quad_panels, "initial panels per piece");
  cmd->add_option("--max-iters", f.max_iters, "optimizer iteration cap");
  cmd->add_option("--grad-tol", f.grad_tol, "optimizer gradient sup-norm tolerance");
  cmd->add_option("--p", f.p_coords, "comma-separated coordinates of p (zero-padded)");
  cmd->add_option("--q", f.q_coords, "comma-separated coordinates of q (zero-padded)");
  cmd->add_option("--init", f.init, "optimize init: straight, perturbed or detour")
      ->check(CLI::IsMember({"straight", "perturbed", "detour"}));
  cmd->add_option("--init-n", f.init_n, "detour direction for --init detour");
  cmd->add_option("--perturb-scale", f.perturb_scale, "noise scale for --init perturbed");
}

l2geo::ExperimentConfig assemble_config(const CLI::App& cmd, const FlagOverrides& f) {
  l2geo::ExperimentConfig cfg;
  if (cmd.count("--config") > 0) cfg = l2geo::load_config(f.config_path);
  if (cmd.count("--dim") > 0) cfg.dim = f.dim;
  if (cmd.count("--n-max") > 0) cfg.n_max = f.n_max;
  if (cmd.count("--segments") > 0) cfg.segments = f.segments;
  if (cmd.count("--metric") > 0) {
    cfg.metric = f.metric == "weak" ? l2geo::MetricKind::weak : l2geo::MetricKind::euclidean;
  }
  if (cmd.count("--seed") > 0) cfg.seed = f.seed;
  if (cmd.count("--out") > 0) cfg.out = f.out;
  if (cmd.count("--quad-nodes") > 0) cfg.quad_nodes = f.quad_nodes;
  if (cmd.count("--quad-panels") > 0) cfg.quad_panels = f.quad_panels;
  if (cmd.count("--max-iters") > 0) cfg.max_iters = f.max_iters;
  if (cmd.count("--grad-tol") > 0) cfg.grad_tol = f.grad_tol;
  if (cmd.count("--p") > 0) cfg.p = parse_coords(f.p_coords);
  if (cmd.count("--q") > 0) cfg.q = parse_coords(f.q_coords);
  if (cmd.count("--init") > 0) {
    cfg.init = f.init == "straight"    ? l2geo::InitKind::straight
               : f.init == "perturbed" ? l2geo::InitKind::perturbed
                                       : l2geo::InitKind::detour;
  }
  if (cmd.count("--init-n") > 0) cfg.init_n = f.init_n;
  if (cmd.count("--perturb-scale") > 0) cfg.perturb_scale = f.perturb_scale;
  return cfg;
}

int emit(const l2geo::ResultTable& table, const l2geo::ExperimentConfig& cfg) {
  if (cfg.out.empty()) {
    std::cout << table.to_csv();
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw l2geo::ConfigError("cannot open output file: " + cfg.out);
    out << table.to_csv();
  }
  return l2geo::exit_code_for(table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodesic-length experiments for conformal metrics on truncated sequence spaces"};
  app.require_subcommand(1);

  FlagOverrides flags;
  using Runner = std::function<l2geo::ResultTable(const l2geo::ExperimentConfig&)>;
  std::vector<std::pair<CLI::App*, Runner>> runners;

  auto* verify = app.add_subcommand(
      "verify-bounds", "check per-piece detour lengths against the closed-form bounds");
  runners.emplace_back(verify, l2geo::cmd_verify_bounds);

  auto* sweep = app.add_subcommand(
      "sweep-detours", "total detour length and running minimum over n = 1..n_max");
  runners.emplace_back(sweep, l2geo::cmd_sweep_detours);

  auto* optimize = app.add_subcommand(
      "optimize", "gradient-descent path shortening from a configurable initial polyline");
  runners.emplace_back(optimize, l2geo::cmd_optimize);

  auto* compare = app.add_subcommand(
      "compare", "optimized distance estimates under the weak and euclidean metrics");
  runners.emplace_back(compare, l2geo::cmd_compare);

  for (auto& [cmd, runner] : runners) add_common_flags(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad flags are config errors
  }

  try {
    for (auto& [cmd, runner] : runners) {
      if (cmd->parsed()) {
        const l2geo::ExperimentConfig cfg = assemble_config(*cmd, flags);
        return emit(runner(cfg), cfg);
      }
    }
  } catch (const l2geo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
