// Command-line front end for convergence studies.
//
//   lowreg-nls run <config-file> [--workers N]
//   lowreg-nls preset <name> [--scale desk|paper] [--out DIR] [--workers N] [--seed S]
//   lowreg-nls oracle-check [--K 8]
//   lowreg-nls list-presets
//
// Exit codes: 0 success, 1 runtime failure, 2 config error, 3 every row of
// some scheme blew up.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>

#include "lowreg/error.hpp"
#include "lowreg/harness/config.hpp"
#include "lowreg/harness/oracle_check.hpp"
#include "lowreg/harness/outputs.hpp"
#include "lowreg/harness/presets.hpp"
#include "lowreg/harness/study.hpp"

namespace {

using namespace lowreg;
using namespace lowreg::harness;

constexpr int kExitConfig = 2;
constexpr int kExitBlowUp = 3;

std::optional<int> workers_from_env() {
  const char* env = std::getenv("LOWREG_NLS_WORKERS");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw ConfigError("LOWREG_NLS_WORKERS must be a positive integer");
  return static_cast<int>(n);
}

int run_study(StudyConfig config, std::optional<int> workers) {
  if (workers) {
    config.workers = *workers;
  } else if (auto env = workers_from_env()) {
    config.workers = *env;
  }
  const auto table = run_convergence_study(config);
  emit_outputs(table, config);

  std::set<SchemeKind> all_failed;
  for (auto kind : config.schemes) {
    const auto rows = table.rows_for(kind);
    bool every = !rows.empty();
    for (const auto* r : rows) every = every && r->failed;
    if (every) all_failed.insert(kind);
  }
  for (auto kind : config.schemes) {
    const auto& slope = table.fitted_slopes.at(kind);
    std::printf("%-13s slope %s", std::string(integrators::to_string(kind)).c_str(),
                slope ? std::to_string(*slope).c_str() : "n/a");
    if (all_failed.contains(kind)) std::printf("  (all rows failed)");
    std::printf("\n");
  }
  std::printf("results written to %s\n", config.output_dir.string().c_str());
  return all_failed.empty() ? 0 : kExitBlowUp;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergence studies for time integrators of nonlinear Schroedinger equations"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<int> workers;
  auto* run = app.add_subcommand("run", "Run the study described by a config file");
  run->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
  run->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  std::string preset_name, scale_name = "paper", out_dir;
  std::optional<std::uint64_t> seed;
  auto* pre = app.add_subcommand("preset", "Run a named experiment");
  pre->add_option("name", preset_name, "Preset name (see list-presets)")->required();
  pre->add_option("--scale", scale_name, "desk or paper")->check(CLI::IsMember({"desk", "paper"}));
  pre->add_option("--out", out_dir, "Output directory");
  pre->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  pre->add_option("--seed", seed, "Seed for random initial data");

  int oracle_K = 8;
  auto* oracle = app.add_subcommand("oracle-check", "Compare steps against brute-force sums");
  oracle->add_option("--K", oracle_K, "Grid half-size");

  auto* list = app.add_subcommand("list-presets", "List preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*list) {
      for (const auto& name : list_presets()) std::printf("%s\n", name.c_str());
      return 0;
    }
    if (*oracle) {
      bool ok = true;
      for (const auto& d : run_oracle_check(oracle_K)) {
        std::printf("%-40s max deviation %.3e (tol %.0e) %s\n", d.name.c_str(), d.max_deviation,
                    d.tolerance, d.passed() ? "ok" : "FAIL");
        ok = ok && d.passed();
      }
      return ok ? 0 : 1;
    }
    if (*run) return run_study(load_config(config_path), workers);

    StudyConfig config = preset(preset_name, *parse_preset_scale(scale_name));
    if (!out_dir.empty()) config.output_dir = out_dir;
    if (seed) config.initial.seed = *seed;
    return run_study(config, workers);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
