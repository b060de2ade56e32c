// Scenario runner. Exit codes: 0 ok, 2 usage/config error, 3 capacity error,
// 4 budget exhausted, 5 protocol error, 1 anything else.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "qarena/errors.hpp"
#include "qarena/parallel.hpp"
#include "qarena/scenarios.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitBudget = 4;
constexpr int kExitProtocol = 5;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arena: interactive distribution-verification games, heavy-output spoofing and "
               "noise-budget experiments with deterministic seeds"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand(
      "run", "Run a scenario (game | clifford | maxcut | xhog-spoof | entropy-survey | noise-grid)");
  std::string scenario;
  std::string config_path;
  run->add_option("scenario", scenario, "Scenario name")->required();
  run->add_option("--config", config_path, "Flat key = value config file")->required();

  // Command-line overrides for the common knobs.
  std::string seed_override, eps_override, delta_override, out_override, threads_override;
  run->add_option("--seed", seed_override, "Override the run seed");
  run->add_option("--eps", eps_override, "Override the distinguishability parameter");
  run->add_option("--delta", delta_override, "Override the confidence parameter");
  run->add_option("--out", out_override, "Output directory (default: $ARENA_OUT_DIR or '.')");
  run->add_option("--threads", threads_override, "Worker thread cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    qarena::ScenarioConfig cfg = qarena::load_scenario_config(scenario, config_path);
    if (!seed_override.empty()) cfg.set("seed", seed_override);
    if (!eps_override.empty()) cfg.set("eps", eps_override);
    if (!delta_override.empty()) cfg.set("delta", delta_override);
    if (!threads_override.empty()) cfg.set("threads", threads_override);
    if (!out_override.empty()) {
      cfg.out_dir = out_override;
    } else if (!cfg.values.count("out")) {
      if (const char* env = std::getenv("ARENA_OUT_DIR")) cfg.out_dir = env;
    }
    return qarena::run_scenario(cfg);
  } catch (const qarena::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qarena::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qarena::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const qarena::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const qarena::ProtocolError& e) {
    std::cerr << "protocol error: " << e.what() << "\n";
    return kExitProtocol;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
