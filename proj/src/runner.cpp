#include "ldc/runner.hpp"

#include <chrono>
#include <thread>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ldc {

namespace {

using nlohmann::json;

json model_json(const Scenario& sc) {
  json values = json::object();
  if (sc.is_flow()) {
    for (const auto& [name, value] : params(sc.flow())) values[name] = value;
  } else {
    for (const auto& [name, value] : params(sc.map())) values[name] = value;
  }
  return {{"kind", sc.model_kind_name()}, {"params", values}};
}

json manifest_json(const Scenario& sc, const RunOptions& opt, const RunResult& result,
                   const std::vector<std::pair<std::string, std::string>>& digests,
                   double pgm_lo, double pgm_hi, int threads_used) {
  json overrides = json::object();
  for (const auto& [key, value] : opt.overrides) overrides[key] = value;
  if (opt.resolution > 0) overrides["resolution"] = std::to_string(opt.resolution);
  if (opt.final_time > 0) overrides["final-time"] = std::to_string(opt.final_time);
  if (opt.iterates > 0) overrides["iterates"] = std::to_string(opt.iterates);

  json post = json::array();
  for (const auto& step : sc.post) post.push_back(step.describe());

  json ld = {{"observable", sc.ld.observable == Observable::ArcLength ? "arc-length"
                            : sc.ld.observable == Observable::PNorm   ? "p-norm"
                                                                      : "action-2t"},
             {"direction", sc.ld.direction == Direction::Forward    ? "forward"
                           : sc.ld.direction == Direction::Backward ? "backward"
                                                                    : "both"}};
  if (sc.is_flow()) {
    ld["final_time"] = sc.ld.final_time;
    ld["step"] = sc.ld.integrator.step;
  } else {
    ld["iterates"] = sc.ld.iterates;
  }
  if (sc.ld.observable == Observable::PNorm) ld["p"] = sc.ld.p;

  json section = {{"axis1", {{"name", sc.section.axis1.name},
                             {"lo", sc.section.axis1.lo},
                             {"hi", sc.section.axis1.hi}}},
                  {"resolution", sc.section.resolution},
                  {"line_mode", sc.section.line_mode}};
  if (!sc.section.line_mode)
    section["axis2"] = {{"name", sc.section.axis2.name},
                        {"lo", sc.section.axis2.lo},
                        {"hi", sc.section.axis2.hi}};
  if (sc.section.lift) section["lift_energy"] = sc.section.lift->energy;

  json outputs = json::array();
  for (const auto& [file, digest] : digests)
    outputs.push_back({{"file", file}, {"fnv1a64", digest}});

  json meta = {
      {"scenario", sc.name},
      {"version", version_string},
      {"model", model_json(sc)},
      {"section", section},
      {"ld", ld},
      {"post", post},
      {"overrides", overrides},
      {"threads", threads_used},
      {"wall_clock_seconds", result.wall_clock_seconds},
      {"mesh", {{"h1", sc.section.spacing1()},
                {"h2", sc.section.line_mode ? 0.0 : sc.section.spacing2()}}},
      {"stats",
       {{"min", result.stats.min},
        {"max", result.stats.max},
        {"p01", result.stats.p01},
        {"p50", result.stats.p50},
        {"p99", result.stats.p99},
        {"masked_cells", result.stats.masked_cells},
        {"cells", result.stats.cells}}},
      {"outputs", outputs},
  };
  if (pgm_hi > pgm_lo) meta["pgm_range"] = {pgm_lo, pgm_hi};
  if (!sc.probes.empty()) {
    json probes = json::object();
    for (const auto& p : sc.probes) probes[p.name] = {p.lo1, p.hi1, p.lo2, p.hi2};
    meta["probes"] = probes;
  }
  return meta;
}

void write_manifest_atomically(const json& meta, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << meta.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

FieldStats landscape_stats(const Landscape& land) {
  ScalarField pseudo;
  pseudo.n1 = static_cast<int>(land.ld.size());
  pseudo.n2 = 1;
  pseudo.values = land.ld;
  pseudo.mask = land.mask;
  return field_stats(pseudo);
}

}  // namespace

Scenario resolve_scenario(const std::string& ref) {
  const bool looks_like_path =
      ref.find('/') != std::string::npos || ref.find(".scenario") != std::string::npos;
  if (!looks_like_path) {
    for (const auto& name : builtin_scenario_names()) {
      if (name == ref) return load_builtin(ref);
    }
  }
  if (std::filesystem::exists(ref)) {
    std::ifstream in(ref);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), std::filesystem::path(ref).stem().string());
  }
  throw std::invalid_argument("unknown scenario: " + ref);
}

RunResult run_scenario(Scenario sc, const RunOptions& opt) {
  for (const auto& [key, value] : opt.overrides) apply_override(sc, key, value);
  if (opt.resolution > 0) sc.section.resolution = opt.resolution;
  if (opt.final_time > 0) sc.ld.final_time = opt.final_time;
  if (opt.iterates > 0) sc.ld.iterates = opt.iterates;

  std::filesystem::create_directories(opt.out_dir);

  RunResult result;
  std::vector<std::pair<std::string, std::string>> digests;
  double pgm_lo = 0.0, pgm_hi = 0.0;
  const auto started = std::chrono::steady_clock::now();

  if (sc.section.line_mode) {
    const Landscape land = sc.is_flow()
                               ? landscape_1d(sc.flow(), sc.section, sc.ld, opt.threads)
                               : landscape_1d(sc.map(), sc.section, sc.ld, opt.threads);
    result.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    result.stats = landscape_stats(land);
    if (sc.out_csv) {
      const auto path = opt.out_dir / (sc.name + ".csv");
      write_landscape_csv(land, sc.section.axis1.name, path);
      digests.emplace_back(path.filename().string(), file_digest(path));
      result.outputs.push_back(path);
    }
  } else {
    ScalarField field = sc.is_flow() ? sweep(sc.flow(), sc.section, sc.ld, opt.threads)
                                     : sweep(sc.map(), sc.section, sc.ld, opt.threads);
    for (const auto& step : sc.post) {
      switch (step.kind) {
        case PostStep::Kind::SecondDiff: field = second_diff_field(field); break;
        case PostStep::Kind::GradientNorm: field = gradient_norm_field(field); break;
        case PostStep::Kind::Log10: field = log10_transform(std::move(field), step.floor_value); break;
      }
    }
    result.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    result.stats = field_stats(field);
    if (sc.out_csv) {
      const auto path = opt.out_dir / (sc.name + ".csv");
      write_csv(field, path);
      digests.emplace_back(path.filename().string(), file_digest(path));
      result.outputs.push_back(path);
    }
    if (sc.out_pgm) {
      pgm_lo = result.stats.p01;
      pgm_hi = result.stats.p99;
      const auto path = opt.out_dir / (sc.name + ".pgm");
      write_pgm(field, path, pgm_lo, pgm_hi);
      digests.emplace_back(path.filename().string(), file_digest(path));
      result.outputs.push_back(path);
      if (!opt.quiet)
        std::fprintf(stderr, "hint: preview the map with e.g. `magick %s %s.png`\n",
                     path.c_str(), path.stem().c_str());
    }
  }

  const int threads_used =
      opt.threads > 0 ? opt.threads
                      : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  if (sc.out_meta) {
    const auto path = opt.out_dir / (sc.name + ".manifest.json");
    write_manifest_atomically(manifest_json(sc, opt, result, digests, pgm_lo, pgm_hi, threads_used),
                              path);
    result.outputs.push_back(path);
  }

  if (!opt.quiet) {
    std::fprintf(stderr,
                 "%s: %zu/%zu cells admissible | min %.6g p01 %.6g p50 %.6g p99 %.6g max %.6g | "
                 "%.2f s\n",
                 sc.name.c_str(), result.stats.cells - result.stats.masked_cells,
                 result.stats.cells, result.stats.min, result.stats.p01, result.stats.p50,
                 result.stats.p99, result.stats.max, result.wall_clock_seconds);
  }

  if (result.stats.degenerate()) {
    std::fprintf(stderr, "warning: %s produced a fully masked field\n", sc.name.c_str());
    result.status = RunStatus::DegenerateOutput;
  }
  return result;
}

}  // namespace ldc
