#include "ldc/scenario.hpp"

#include <array>
#include <stdexcept>

namespace ldc {

namespace {

struct BuiltinEntry {
  const char* name;
  const char* text;
};

// Reference catalogue: one scenario per stability map, desk-scale settings.
const std::array<BuiltinEntry, 20> builtins = {{
    {"pendulum-landscape", R"(name = pendulum-landscape
title = LD and |d2 LD| along the action line phi = 0 of the pendulum
[model]
kind = pendulum
[section]
axis1 = I -2.5 2.5
resolution = 500
line = true
[ld]
observable = arc-length
direction = forward
final-time = 100
step = 0.01
[outputs]
csv
meta
)"},

    {"pendulum-field", R"(name = pendulum-field
title = log10 |d2 LD| map of the pendulum cat-eye
[model]
kind = pendulum
[section]
axis1 = phi -pi pi
axis2 = I -2.5 2.5
resolution = 500
[ld]
observable = arc-length
direction = forward
final-time = 100
step = 0.01
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"modulated-pendulum", R"(name = modulated-pendulum
title = log10 |d2 LD| map of the modulated pendulum, mu = 0.1
[model]
kind = modulated-pendulum
mu = 0.1
[section]
axis1 = phi -pi pi
axis2 = I -2.5 2.5
resolution = 500
[ld]
observable = arc-length
direction = forward
final-time = 100
step = 0.01
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"modulated-pendulum-landscape", R"(name = modulated-pendulum-landscape
title = LD landscape across the modulated pendulum chaotic layer
[model]
kind = modulated-pendulum
mu = 0.1
[section]
axis1 = I -2.5 2.5
resolution = 500
line = true
[ld]
observable = arc-length
direction = forward
final-time = 100
step = 0.01
[outputs]
csv
meta
)"},

    {"chirikov-overlap", R"(name = chirikov-overlap
title = log10 |d2 LD| map of the two-resonance model, eps = 0.5, mu = 0.01
[model]
kind = chirikov-overlap
eps = 0.5
mu = 0.01
[section]
axis1 = phi -pi pi
axis2 = I -0.6 1.6
resolution = 500
[ld]
observable = arc-length
direction = forward
final-time = 100
step = 0.01
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"chirikov-overlap-landscape", R"(name = chirikov-overlap-landscape
title = LD landscape across both resonant eyes of the two-resonance model
[model]
kind = chirikov-overlap
eps = 0.5
mu = 0.01
[section]
axis1 = I -0.6 1.6
resolution = 500
line = true
[ld]
observable = arc-length
direction = forward
final-time = 100
step = 0.01
[outputs]
csv
meta
)"},

    {"fgl-macro", R"(name = fgl-macro
title = Arnold web of the three degree-of-freedom model, macroscopic action window
[model]
kind = fgl
eps = 0.01
[section]
axis1 = I1 -0.5 1.5
axis2 = I2 -0.5 1.5
resolution = 500
[ld]
observable = arc-length
direction = forward
final-time = 1000
step = 0.01
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"fgl-micro", R"(name = fgl-micro
title = Arnold web, microscopic action window
[model]
kind = fgl
eps = 0.01
[section]
axis1 = I1 0.3 0.4
axis2 = I2 0.1 0.2
resolution = 500
[ld]
observable = arc-length
direction = forward
final-time = 1000
step = 0.01
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"standard-map-k06", R"(name = standard-map-k06
title = log10 |d2 LD| map of the standard map, k = 0.6
[model]
kind = standard-map
k = 0.6
[section]
axis1 = x 0 1
axis2 = y 0 1
resolution = 500
[ld]
observable = arc-length
iterates = 150
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
[probes]
# chaotic: layer around the hyperbolic point at (0.5, 0)
# regular: librational band inside the main island, off the elliptic center
# circulation: rotational band between low-order resonances
chaotic = 0.46 0.54 0.0 0.02
regular = 0.02 0.12 0.04 0.14
circulation = 0.1 0.9 0.605 0.635
)"},

    {"standard-map-k1", R"(name = standard-map-k1
title = log10 |d2 LD| map of the standard map, k = 1
[model]
kind = standard-map
k = 1
[section]
axis1 = x 0 1
axis2 = y 0 1
resolution = 500
[ld]
observable = arc-length
iterates = 150
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"standard-map-landscape", R"(name = standard-map-landscape
title = LD landscape of the standard map along x = 0 (set k=0 for the integrable profile)
[model]
kind = standard-map
k = 0.6
[section]
axis1 = y 0 0.5
resolution = 500
line = true
[ld]
observable = arc-length
iterates = 150
[outputs]
csv
meta
)"},

    {"froeschle4d-sigma1", R"(name = froeschle4d-sigma1
title = Resonance geography of the 4D symplectic map, full action window
[model]
kind = froeschle-4d
eps = 0.6
[section]
axis1 = x 0 pi
axis2 = z 0 pi
resolution = 500
[ld]
observable = arc-length
iterates = 1000
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"froeschle4d-sigma2", R"(name = froeschle4d-sigma2
title = Resonance geography of the 4D symplectic map, zoom on the x = 2z resonance
[model]
kind = froeschle-4d
eps = 0.6
[section]
axis1 = x 1.45 1.85
axis2 = z 0.6 1
resolution = 500
[ld]
observable = arc-length
iterates = 1000
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"gen-froeschle-symplectic", R"(name = gen-froeschle-symplectic
title = log10 |d2 LD| action-plane map of the coupled standard maps, symplectic case
[model]
kind = generalized-froeschle
a = 0.1
b = 0.1
c = 0.07
phase = 0
[section]
axis1 = y1 -0.5 0.5
axis2 = y2 -0.5 0.5
resolution = 500
[ld]
observable = arc-length
iterates = 1000
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"gen-froeschle-symplectic-grad", R"(name = gen-froeschle-symplectic-grad
title = log10 |grad LD| action-plane map of the coupled standard maps (first-order baseline)
[model]
kind = generalized-froeschle
a = 0.1
b = 0.1
c = 0.07
phase = 0
[section]
axis1 = y1 -0.5 0.5
axis2 = y2 -0.5 0.5
resolution = 500
[ld]
observable = arc-length
iterates = 1000
[post]
gradient-norm
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"gen-froeschle-volume", R"(name = gen-froeschle-volume
title = log10 |d2 LD| action-plane map of the coupled standard maps, volume-preserving case
[model]
kind = generalized-froeschle
a = 0.05
b = 0.05
c = 0.035
phase = 0.1
[section]
axis1 = y1 -0.5 0.5
axis2 = y2 -0.5 0.5
resolution = 500
[ld]
observable = arc-length
iterates = 1000
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"hh-global", R"(name = hh-global
title = Henon-Heiles (y, py) stability map at E = 0.105
[model]
kind = henon-heiles
[section]
axis1 = y -0.45 0.65
axis2 = py -0.5 0.5
resolution = 500
lift = iso-energetic 0.105
[ld]
observable = arc-length
direction = forward
final-time = 300
step = 0.01
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"hh-zoom", R"(name = hh-zoom
title = Henon-Heiles zoom near the origin at E = 0.118, long window (t = 10000; expect a long run)
[model]
kind = henon-heiles
[section]
axis1 = y -0.15 0.15
axis2 = py -0.15 0.15
resolution = 500
lift = iso-energetic 0.118
[ld]
observable = arc-length
direction = forward
final-time = 10000
step = 0.01
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"hh-zoom-t300", R"(name = hh-zoom-t300
title = Henon-Heiles zoom near the origin at E = 0.118, short-window variant
[model]
kind = henon-heiles
[section]
axis1 = y -0.15 0.15
axis2 = py -0.15 0.15
resolution = 500
lift = iso-energetic 0.118
[ld]
observable = arc-length
direction = forward
final-time = 300
step = 0.01
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},

    {"hh-ype", R"(name = hh-ype
title = Henon-Heiles (y, E) stability map with py = 0
[model]
kind = henon-heiles
[section]
axis1 = y -0.6 1.1
axis2 = E 0.01 0.18
resolution = 500
lift = iso-energetic 0
[ld]
observable = arc-length
direction = forward
final-time = 300
step = 0.01
[post]
second-diff
log10 1e-16
[outputs]
csv
pgm
meta
)"},
}};

}  // namespace

std::vector<std::string> builtin_scenario_names() {
  std::vector<std::string> names;
  names.reserve(builtins.size());
  for (const auto& b : builtins) names.emplace_back(b.name);
  return names;
}

std::string builtin_scenario_text(const std::string& name) {
  for (const auto& b : builtins) {
    if (name == b.name) return b.text;
  }
  throw std::out_of_range("unknown scenario: " + name);
}

Scenario load_builtin(const std::string& name) {
  return parse_scenario(builtin_scenario_text(name), name);
}

std::vector<ScenarioSummary> list_scenarios() {
  std::vector<ScenarioSummary> out;
  out.reserve(builtins.size());
  for (const auto& b : builtins) {
    const Scenario sc = parse_scenario(b.text, b.name);
    out.push_back({sc.name, sc.model_kind_name(), sc.section_description(),
                   sc.window_description(), sc.title});
  }
  return out;
}

}  // namespace ldc
