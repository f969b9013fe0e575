#ifndef LDC_SCENARIO_HPP
#define LDC_SCENARIO_HPP

#include <string>
#include <variant>
#include <vector>

#include "ldc/fields.hpp"
#include "ldc/ld.hpp"
#include "ldc/models.hpp"

namespace ldc {

struct PostStep {
  enum class Kind { SecondDiff, GradientNorm, Log10 } kind = Kind::SecondDiff;
  double floor_value = 1e-16;  // Log10 only

  std::string describe() const;
};

// Axis-aligned probe region in section coordinates, referenced by the
// acceptance statistics so the boxes live with the scenario definition.
struct ProbeBox {
  std::string name;
  double lo1 = 0.0, hi1 = 0.0, lo2 = 0.0, hi2 = 0.0;
};

struct Scenario {
  std::string name;
  std::string title;
  std::variant<FlowModel, MapModel> model;
  SectionSpec section;
  LDConfig ld;
  std::vector<PostStep> post;
  bool out_csv = false, out_pgm = false, out_meta = false;
  std::vector<ProbeBox> probes;

  bool is_flow() const { return std::holds_alternative<FlowModel>(model); }
  const FlowModel& flow() const { return std::get<FlowModel>(model); }
  const MapModel& map() const { return std::get<MapModel>(model); }
  std::string model_kind_name() const;
  std::string window_description() const;
  std::string section_description() const;
  const ProbeBox* probe(const std::string& name) const;
};

// Flat key-value text with [model]/[section]/[ld]/[post]/[outputs] sections;
// see the built-in scenarios for the reference layout.
Scenario parse_scenario(const std::string& text, const std::string& fallback_name);

// Assign one scenario parameter by name: model parameters by their own name
// (k, eps, mu, a, b, c, phase), plus resolution, final_time, iterates, step,
// p, energy, floor, axis1.lo/hi, axis2.lo/hi. Throws on unknown keys.
void apply_override(Scenario& scenario, const std::string& key, const std::string& value);

// Built-in scenario registry.
struct ScenarioSummary {
  std::string name;
  std::string model;
  std::string section;
  std::string window;
  std::string title;
};

std::vector<std::string> builtin_scenario_names();
std::string builtin_scenario_text(const std::string& name);  // throws if unknown
Scenario load_builtin(const std::string& name);
std::vector<ScenarioSummary> list_scenarios();

}  // namespace ldc

#endif
