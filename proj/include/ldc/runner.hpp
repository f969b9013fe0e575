#ifndef LDC_RUNNER_HPP
#define LDC_RUNNER_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "ldc/output.hpp"
#include "ldc/scenario.hpp"

namespace ldc {

inline constexpr const char* version_string = "0.1.0";

enum class RunStatus : int {
  Ok = 0,
  IoError = 1,
  UsageError = 2,
  DegenerateOutput = 3,
};

struct RunOptions {
  std::vector<std::pair<std::string, std::string>> overrides;  // --set key=value
  int resolution = 0;     // 0 keeps the scenario value
  double final_time = 0;  // 0 keeps the scenario value
  long long iterates = 0;
  int threads = 0;  // 0 = hardware concurrency
  std::filesystem::path out_dir = ".";
  bool quiet = false;
};

struct RunResult {
  RunStatus status = RunStatus::Ok;
  std::vector<std::filesystem::path> outputs;
  FieldStats stats;
  double wall_clock_seconds = 0.0;
};

// Built-in scenario by name, or a scenario file if `ref` names one on disk.
Scenario resolve_scenario(const std::string& ref);

// Sweep, post-process and write the scenario's artifacts. Throws
// std::invalid_argument / std::runtime_error for usage and I/O failures the
// caller maps to exit codes; a fully masked result returns DegenerateOutput.
RunResult run_scenario(Scenario scenario, const RunOptions& options);

}  // namespace ldc

#endif
