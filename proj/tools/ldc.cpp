#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldc/runner.hpp"

namespace {

int threads_from_env() {
  const char* env = std::getenv("LDC_THREADS");
  if (!env) return 0;
  const int value = std::atoi(env);
  return value > 0 ? value : 0;
}

int do_list() {
  std::printf("%-32s %-22s %-12s %s\n", "name", "model", "window", "section");
  for (const auto& s : ldc::list_scenarios()) {
    std::printf("%-32s %-22s %-12s %s\n", s.name.c_str(), s.model.c_str(), s.window.c_str(),
                s.section.c_str());
  }
  return 0;
}

int do_run(const std::string& ref, const std::vector<std::string>& sets, int resolution,
           double final_time, long long iterates, int threads, const std::string& out_dir,
           bool quiet) {
  ldc::RunOptions opt;
  opt.resolution = resolution;
  opt.final_time = final_time;
  opt.iterates = iterates;
  opt.threads = threads > 0 ? threads : threads_from_env();
  opt.out_dir = out_dir;
  opt.quiet = quiet;
  for (const auto& assignment : sets) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "error: --set expects key=value, got '%s'\n", assignment.c_str());
      return static_cast<int>(ldc::RunStatus::UsageError);
    }
    opt.overrides.emplace_back(assignment.substr(0, eq), assignment.substr(eq + 1));
  }

  try {
    ldc::Scenario scenario = ldc::resolve_scenario(ref);
    const auto result = ldc::run_scenario(std::move(scenario), opt);
    return static_cast<int>(result.status);
  } catch (const std::invalid_argument& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return static_cast<int>(ldc::RunStatus::UsageError);
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return static_cast<int>(ldc::RunStatus::IoError);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrangian descriptor stability maps"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the built-in scenarios");

  auto* run = app.add_subcommand("run", "Run a scenario and write its artifacts");
  std::string scenario_ref;
  std::vector<std::string> sets;
  int resolution = 0;
  double final_time = 0.0;
  long long iterates = 0;
  int threads = 0;
  std::string out_dir = ".";
  bool quiet = false;
  run->add_option("scenario", scenario_ref, "Built-in scenario name or path to a scenario file")
      ->required();
  run->add_option("--set", sets, "Override a scenario parameter (key=value, repeatable)");
  run->add_option("--resolution", resolution, "Mesh nodes per axis");
  run->add_option("--final-time", final_time, "Flow window length");
  run->add_option("--iterates", iterates, "Map iterate count");
  run->add_option("--threads", threads, "Worker threads (default: LDC_THREADS or all cores)");
  run->add_option("--out", out_dir, "Output directory (default: current)");
  run->add_flag("--quiet", quiet, "Suppress the run summary");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) return do_list();
  return do_run(scenario_ref, sets, resolution, final_time, iterates, threads, out_dir, quiet);
}
