#ifndef LDC_FIELDS_HPP
#define LDC_FIELDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldc/ld.hpp"
#include "ldc/models.hpp"

namespace ldc {

// Axis coordinate index; kEnergyAxis makes the axis scan the lift energy
// instead of a phase-space coordinate (Henon-Heiles (y, E) sections).
inline constexpr int kEnergyAxis = -1;

struct SectionAxis {
  int coord = 0;
  double lo = 0.0;
  double hi = 1.0;
  std::string name;
};

// x = 0 iso-energetic lift for the Henon-Heiles model: px is solved from
// H = energy with px > 0; unsolvable nodes are non-admissible.
struct IsoEnergeticLift {
  double energy = 0.0;
};

struct SectionSpec {
  SectionAxis axis1, axis2;
  int resolution = 500;
  std::vector<double> fixed;  // baseline values for every coordinate
  std::optional<IsoEnergeticLift> lift;
  bool line_mode = false;  // 1D landscape along axis1 only

  double spacing1() const { return (axis1.hi - axis1.lo) / (resolution - 1); }
  double spacing2() const { return (axis2.hi - axis2.lo) / (resolution - 1); }
};

struct ScalarField {
  int n1 = 0, n2 = 0;
  std::vector<double> values;       // index j * n1 + i, axis1 fastest
  std::vector<std::uint8_t> mask;   // 1 = admissible
  double h1 = 0.0, h2 = 0.0;        // physical mesh spacing (metadata only)
  SectionAxis axis1, axis2;

  double& at(int i, int j) { return values[static_cast<std::size_t>(j) * n1 + i]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * n1 + i]; }
  bool admissible(int i, int j) const { return mask[static_cast<std::size_t>(j) * n1 + i] != 0; }
};

struct Landscape {
  std::vector<double> positions;
  std::vector<double> ld;
  std::vector<double> second_diff;
  std::vector<std::uint8_t> mask;
};

// LD over every node of a 2D section. Non-admissible lift nodes and escaped
// trajectories are masked, never fatal. threads <= 0 picks the hardware
// concurrency.
ScalarField sweep(const FlowModel& model, const SectionSpec& section, const LDConfig& cfg,
                  int threads = 0);
ScalarField sweep(const MapModel& model, const SectionSpec& section, const LDConfig& cfg,
                  int threads = 0);

// Lift admissibility alone; no trajectory is integrated.
std::vector<std::uint8_t> admissibility_mask(const FlowModel& model, const SectionSpec& section);

// Sum over axes of |second difference|, unit mesh convention. Interior nodes
// use the symmetric 3-point formula, boundary nodes the one-sided 3-point
// formula; both are exact for quadratics in the index.
ScalarField second_diff_field(const ScalarField& field);

// Euclidean norm of the index-space gradient: central differences interior,
// one-sided 2-point at the boundary.
ScalarField gradient_norm_field(const ScalarField& field);

// value -> log10(max(value, floor)); masked cells untouched.
ScalarField log10_transform(ScalarField field, double floor_value);

// 1D sweep along axis1 plus its second-difference vector (same stencils).
Landscape landscape_1d(const FlowModel& model, const SectionSpec& section, const LDConfig& cfg,
                       int threads = 0);
Landscape landscape_1d(const MapModel& model, const SectionSpec& section, const LDConfig& cfg,
                       int threads = 0);

}  // namespace ldc

#endif
