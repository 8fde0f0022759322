#pragma once

#include "l2geo/shorten.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace l2geo {

/// Invalid or inconsistent configuration; maps to exit status 2 in the CLI.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MetricKind { weak, euclidean };
enum class InitKind { straight, perturbed, detour };

std::string to_string(MetricKind k);
std::string to_string(InitKind k);

/// One flat configuration object shared by every command; unknown JSON keys
/// are rejected so typos surface as config errors instead of silent defaults.
struct ExperimentConfig {
  int dim = 60;
  std::vector<double> p{};  // zero-padded to dim
  std::vector<double> q{};
  MetricKind metric = MetricKind::weak;
  int n_max = 50;
  int segments = 12;
  std::uint64_t seed = 0;

  int max_iters = 5000;
  double grad_tol = 1e-8;
  double initial_step = 1.0;

  int quad_nodes = 16;
  int quad_panels = 8;
  double quad_refine_tol = 1e-10;
  int quad_panel_cap = 1024;

  InitKind init = InitKind::straight;
  int init_n = 1;
  double perturb_scale = 0.05;

  std::string out{};  // empty: stdout

  bool operator==(const ExperimentConfig&) const = default;

  Vector padded_p() const;
  Vector padded_q() const;
  MetricSpec metric_spec() const;
  QuadratureRule quadrature() const;
  OptimizerConfig optimizer() const;
};

nlohmann::json config_to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

/// Throws ConfigError on any invariant violation (non-finite values,
/// coordinate lists longer than dim, n_max > dim, ...).
void validate(const ExperimentConfig& c);

/// All reals are serialized with 17 significant digits so the CSV
/// round-trips doubles exactly.
std::string format_real(double v);

struct ResultTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool all_ok = true;  // outcome of any assertion columns

  std::string to_csv() const;
};

/// 0 when every assertion column passed, 1 otherwise.
int exit_code_for(const ResultTable& t);

// Commands. Each returns the full result table; writing and exit status are
// the CLI's business.
ResultTable cmd_verify_bounds(const ExperimentConfig& cfg);
ResultTable cmd_sweep_detours(const ExperimentConfig& cfg);
ResultTable cmd_optimize(const ExperimentConfig& cfg);
ResultTable cmd_compare(const ExperimentConfig& cfg);

}  // namespace l2geo
