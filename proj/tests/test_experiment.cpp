#include "l2geo/experiment.hpp"

#include <doctest.h>

#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>

using namespace l2geo;

namespace {

ExperimentConfig canonical_config() {
  ExperimentConfig cfg;
  cfg.dim = 60;
  cfg.p = {};
  cfg.q = {1.0};
  cfg.n_max = 50;
  cfg.segments = 12;
  return cfg;
}

}  // namespace

TEST_CASE("config json round-trip preserves every field") {
  ExperimentConfig cfg;
  cfg.dim = 24;
  cfg.p = {0.25, -1.5};
  cfg.q = {1.0, 0.0, 3.5};
  cfg.metric = MetricKind::euclidean;
  cfg.n_max = 17;
  cfg.segments = 9;
  cfg.seed = 987654321;
  cfg.max_iters = 321;
  cfg.grad_tol = 3.5e-7;
  cfg.initial_step = 0.75;
  cfg.quad_nodes = 12;
  cfg.quad_panels = 4;
  cfg.quad_refine_tol = 2e-11;
  cfg.quad_panel_cap = 512;
  cfg.init = InitKind::perturbed;
  cfg.init_n = 3;
  cfg.perturb_scale = 0.125;
  cfg.out = "somewhere.csv";

  const ExperimentConfig back = config_from_json(config_to_json(cfg));
  CHECK(back == cfg);
}

TEST_CASE("unknown and malformed config keys are rejected") {
  nlohmann::json j = config_to_json(ExperimentConfig{});
  j["n_mxa"] = 10;
  CHECK_THROWS_AS(config_from_json(j), ConfigError);

  nlohmann::json bad = config_to_json(ExperimentConfig{});
  bad["dim"] = "sixty";
  CHECK_THROWS_AS(config_from_json(bad), ConfigError);

  CHECK_THROWS_AS(config_from_json(nlohmann::json::array()), ConfigError);

  nlohmann::json metric = config_to_json(ExperimentConfig{});
  metric["metric"] = "strong";
  CHECK_THROWS_AS(config_from_json(metric), ConfigError);
}

TEST_CASE("config validation catches out-of-range fields") {
  ExperimentConfig cfg = canonical_config();
  cfg.n_max = 61;
  CHECK_THROWS_AS(validate(cfg), ConfigError);

  cfg = canonical_config();
  cfg.p = std::vector<double>(61, 0.0);
  CHECK_THROWS_AS(validate(cfg), ConfigError);

  cfg = canonical_config();
  cfg.q = {std::numeric_limits<double>::infinity()};
  CHECK_THROWS_AS(validate(cfg), ConfigError);

  cfg = canonical_config();
  cfg.quad_nodes = 1;
  CHECK_THROWS_AS(validate(cfg), ConfigError);

  cfg = canonical_config();
  cfg.init_n = 0;
  CHECK_THROWS_AS(validate(cfg), ConfigError);

  CHECK_NOTHROW(validate(canonical_config()));
}

TEST_CASE("reals serialize with 17 significant digits and round-trip") {
  CHECK(format_real(0.25) == "0.25");
  CHECK(format_real(1.0) == "1");

  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double x = std::exp(u(rng)) * (u(rng) < 0 ? -1.0 : 1.0);
    CHECK(std::strtod(format_real(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("verify-bounds emits the documented header and all-pass rows") {
  const ExperimentConfig cfg = canonical_config();
  const ResultTable t = cmd_verify_bounds(cfg);

  const std::vector<std::string> header = {"n",           "len_alpha", "len_beta",
                                           "len_gamma",   "bound_alpha", "bound_beta",
                                           "ok_alpha",    "ok_beta",   "ok_gamma"};
  CHECK(t.header == header);
  CHECK(t.rows.size() == 50);
  CHECK(t.all_ok);
  for (const auto& row : t.rows) {
    CHECK(row.size() == 9);
    CHECK(row[6] == "1");
    CHECK(row[7] == "1");
    CHECK(row[8] == "1");
  }
  CHECK(exit_code_for(t) == 0);
}

TEST_CASE("verify-bounds with n_max = 1 reports the unit alpha bound") {
  ExperimentConfig cfg = canonical_config();
  cfg.n_max = 1;
  const ResultTable t = cmd_verify_bounds(cfg);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][0] == "1");
  CHECK(t.rows[0][4] == "1");  // bound_alpha = 1/1
}

TEST_CASE("verify-bounds with coincident endpoints zeroes the beta columns") {
  ExperimentConfig cfg = canonical_config();
  cfg.p = {0.5, 0.25};
  cfg.q = {0.5, 0.25};
  cfg.n_max = 10;
  const ResultTable t = cmd_verify_bounds(cfg);
  CHECK(t.all_ok);
  for (const auto& row : t.rows) {
    CHECK(row[2] == "0");  // len_beta
    CHECK(row[5] == "0");  // bound_beta
  }
}

TEST_CASE("verify-bounds refuses the control metric") {
  ExperimentConfig cfg = canonical_config();
  cfg.metric = MetricKind::euclidean;
  CHECK_THROWS_AS(cmd_verify_bounds(cfg), ConfigError);
}

TEST_CASE("sweep-detours table shape, running minimum and summary row") {
  const ExperimentConfig cfg = canonical_config();
  const ResultTable t = cmd_sweep_detours(cfg);

  CHECK(t.header == std::vector<std::string>{"n", "total_length", "running_min"});
  REQUIRE(t.rows.size() == 51);  // 50 sweep rows + summary

  double prev_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 50; ++i) {
    const double rm = std::strtod(t.rows[i][2].c_str(), nullptr);
    CHECK(rm <= prev_min);
    prev_min = rm;
  }
  // summary: best n and the distance estimate
  CHECK(t.rows[50][0] == "50");
  CHECK(std::strtod(t.rows[50][1].c_str(), nullptr) < 0.05);
  CHECK(t.rows[50][1] == t.rows[50][2]);
}

TEST_CASE("sweep-detours under the control metric respects the chord bound") {
  ExperimentConfig cfg = canonical_config();
  cfg.metric = MetricKind::euclidean;
  cfg.n_max = 12;
  const ResultTable t = cmd_sweep_detours(cfg);
  for (std::size_t i = 0; i < 12; ++i) {
    CHECK(std::strtod(t.rows[i][1].c_str(), nullptr) >= 1.0 - 1e-9);
  }
}

TEST_CASE("optimize table is monotone in energy and ends with a summary row") {
  ExperimentConfig cfg = canonical_config();
  cfg.dim = 8;
  cfg.n_max = 8;
  cfg.metric = MetricKind::euclidean;
  cfg.init = InitKind::perturbed;
  cfg.seed = 7;
  cfg.segments = 6;
  const ResultTable t = cmd_optimize(cfg);

  CHECK(t.header == std::vector<std::string>{"iter", "energy", "length", "grad_norm"});
  REQUIRE(t.rows.size() >= 2);
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& row : t.rows) {
    const double e = std::strtod(row[1].c_str(), nullptr);
    CHECK(e <= prev);
    prev = e;
  }
  // summary duplicates the final iterate
  const auto& last = t.rows[t.rows.size() - 1];
  const auto& final_iterate = t.rows[t.rows.size() - 2];
  CHECK(last[1] == final_iterate[1]);
  CHECK(last[2] == final_iterate[2]);

  const double final_len = std::strtod(last[2].c_str(), nullptr);
  CHECK(std::abs(final_len - 1.0) < 1e-6);
}

TEST_CASE("optimize from a detour start never lengthens the path") {
  ExperimentConfig cfg = canonical_config();
  cfg.dim = 6;
  cfg.n_max = 6;
  cfg.init = InitKind::detour;
  cfg.init_n = 2;
  cfg.segments = 12;
  cfg.max_iters = 300;
  const ResultTable t = cmd_optimize(cfg);
  const double first_len = std::strtod(t.rows.front()[2].c_str(), nullptr);
  const double last_len = std::strtod(t.rows.back()[2].c_str(), nullptr);
  CHECK(last_len <= first_len);
}

TEST_CASE("compare splits the two metrics and stays symmetric in the endpoints") {
  ExperimentConfig cfg = canonical_config();
  cfg.segments = 8;
  const ResultTable t = cmd_compare(cfg);

  CHECK(t.header == std::vector<std::string>{"metric", "estimate", "strategy", "best_n"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][0] == "weak");
  CHECK(t.rows[1][0] == "euclidean");

  const double weak_est = std::strtod(t.rows[0][1].c_str(), nullptr);
  const double euclid_est = std::strtod(t.rows[1][1].c_str(), nullptr);
  CHECK(weak_est < 0.1);
  CHECK(euclid_est == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(t.all_ok);
  CHECK(exit_code_for(t) == 0);

  // swapping p and q leaves both estimates unchanged
  ExperimentConfig swapped = cfg;
  std::swap(swapped.p, swapped.q);
  const ResultTable t2 = cmd_compare(swapped);
  CHECK(std::abs(std::strtod(t2.rows[0][1].c_str(), nullptr) - weak_est) < 1e-9);
  CHECK(std::abs(std::strtod(t2.rows[1][1].c_str(), nullptr) - euclid_est) < 1e-9);
}

TEST_CASE("compare with coincident endpoints reports two zero rows") {
  ExperimentConfig cfg = canonical_config();
  cfg.p = {1.0};
  cfg.q = {1.0};
  const ResultTable t = cmd_compare(cfg);
  CHECK(t.rows[0][1] == "0");
  CHECK(t.rows[1][1] == "0");
  CHECK(t.all_ok);
}

TEST_CASE("assertion failures map to exit code 1") {
  ResultTable t;
  t.all_ok = false;
  CHECK(exit_code_for(t) == 1);
}

TEST_CASE("csv body is deterministic for a fixed config") {
  const ExperimentConfig cfg = canonical_config();
  CHECK(cmd_sweep_detours(cfg).to_csv() == cmd_sweep_detours(cfg).to_csv());
  ExperimentConfig opt = cfg;
  opt.dim = 8;
  opt.n_max = 8;
  opt.init = InitKind::perturbed;
  opt.seed = 99;
  opt.segments = 6;
  opt.metric = MetricKind::euclidean;
  CHECK(cmd_optimize(opt).to_csv() == cmd_optimize(opt).to_csv());
}
