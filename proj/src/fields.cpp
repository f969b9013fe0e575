#include "ldc/fields.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

namespace ldc {

namespace {

constexpr double nanv = std::numeric_limits<double>::quiet_NaN();

int axis_count_energy(const SectionSpec& s) {
  return (s.axis1.coord == kEnergyAxis ? 1 : 0) + (s.axis2.coord == kEnergyAxis ? 1 : 0);
}

void validate_axis(const SectionAxis& axis, int dim, bool energy_allowed) {
  if (axis.coord == kEnergyAxis) {
    if (!energy_allowed) throw std::invalid_argument("energy axis requires an iso-energetic lift");
  } else if (axis.coord < 0 || axis.coord >= dim) {
    throw std::invalid_argument("section axis out of range for model");
  }
  if (!(axis.lo < axis.hi) || !std::isfinite(axis.lo) || !std::isfinite(axis.hi))
    throw std::invalid_argument("section axis range must be finite with lo < hi");
}

template <class Model>
void validate_section(const Model& model, const SectionSpec& s, bool expect_line) {
  if (s.line_mode != expect_line)
    throw std::invalid_argument(expect_line ? "section is not in line mode"
                                            : "line-mode section passed to 2D sweep");
  if (s.resolution < 3) throw std::invalid_argument("resolution must be >= 3");
  if (static_cast<int>(s.fixed.size()) != model.dim())
    throw std::invalid_argument("fixed coordinates must cover the model dimension");
  const bool has_lift = s.lift.has_value();
  if constexpr (std::is_same_v<Model, FlowModel>) {
    if (has_lift && model.kind != FlowKind::HenonHeiles)
      throw std::invalid_argument("iso-energetic lift is defined for the Henon-Heiles model");
  } else {
    if (has_lift) throw std::invalid_argument("iso-energetic lift does not apply to maps");
  }
  validate_axis(s.axis1, model.dim(), has_lift);
  if (!expect_line) validate_axis(s.axis2, model.dim(), has_lift);
  if (axis_count_energy(s) > 1) throw std::invalid_argument("at most one energy axis");
}

// Initial condition at mesh node (value1, value2); nullopt = non-admissible.
std::optional<StateVector> node_state(const FlowModel& /*model*/, const SectionSpec& s,
                                      double value1, double value2, bool line) {
  StateVector x(s.fixed.size());
  for (std::size_t c = 0; c < s.fixed.size(); ++c) x[c] = s.fixed[c];
  double energy = s.lift ? s.lift->energy : 0.0;
  if (s.axis1.coord == kEnergyAxis)
    energy = value1;
  else
    x[s.axis1.coord] = value1;
  if (!line) {
    if (s.axis2.coord == kEnergyAxis)
      energy = value2;
    else
      x[s.axis2.coord] = value2;
  }
  if (s.lift) {
    const auto px = hh_lift(x[1], x[3], energy);
    if (!px) return std::nullopt;
    x[2] = *px;
  }
  return x;
}

std::optional<StateVector> node_state(const MapModel& /*model*/, const SectionSpec& s,
                                      double value1, double value2, bool line) {
  StateVector z(s.fixed.size());
  for (std::size_t c = 0; c < s.fixed.size(); ++c) z[c] = s.fixed[c];
  z[s.axis1.coord] = value1;
  if (!line) z[s.axis2.coord] = value2;
  return z;
}

LDValue evaluate(const FlowModel& model, const StateVector& x, const LDConfig& cfg) {
  return ld_flow(model, x, cfg);
}

LDValue evaluate(const MapModel& model, const StateVector& z, const LDConfig& cfg) {
  return ld_map(model, z, cfg);
}

void parallel_rows(int rows, int threads, const std::function<void(int)>& row_fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min(threads, rows);
  if (threads == 1) {
    for (int j = 0; j < rows; ++j) row_fn(j);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    try {
      for (int j = next.fetch_add(1); j < rows; j = next.fetch_add(1)) row_fn(j);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(rows);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

template <class Model>
ScalarField sweep_impl(const Model& model, const SectionSpec& s, const LDConfig& cfg,
                       int threads) {
  validate_section(model, s, false);
  const int n = s.resolution;
  ScalarField field;
  field.n1 = field.n2 = n;
  field.values.assign(static_cast<std::size_t>(n) * n, nanv);
  field.mask.assign(static_cast<std::size_t>(n) * n, 0);
  field.h1 = s.spacing1();
  field.h2 = s.spacing2();
  field.axis1 = s.axis1;
  field.axis2 = s.axis2;

  parallel_rows(n, threads, [&](int j) {
    const double value2 = s.axis2.lo + j * field.h2;
    for (int i = 0; i < n; ++i) {
      const double value1 = s.axis1.lo + i * field.h1;
      const auto x0 = node_state(model, s, value1, value2, false);
      if (!x0) continue;
      const LDValue ld = evaluate(model, *x0, cfg);
      if (ld.status != LDStatus::Ok) continue;
      field.at(i, j) = ld.value;
      field.mask[static_cast<std::size_t>(j) * n + i] = 1;
    }
  });
  return field;
}

template <class Model>
Landscape landscape_impl(const Model& model, const SectionSpec& s, const LDConfig& cfg,
                         int threads) {
  validate_section(model, s, true);
  const int n = s.resolution;
  const double h = s.spacing1();
  Landscape out;
  out.positions.resize(n);
  out.ld.assign(n, nanv);
  out.second_diff.assign(n, nanv);
  out.mask.assign(n, 0);

  // Chunk the line into pseudo-rows so threads stay busy.
  const int chunk = 16;
  const int chunks = (n + chunk - 1) / chunk;
  parallel_rows(chunks, threads, [&](int cidx) {
    for (int i = cidx * chunk; i < std::min(n, (cidx + 1) * chunk); ++i) {
      const double value1 = s.axis1.lo + i * h;
      out.positions[i] = value1;
      const auto x0 = node_state(model, s, value1, 0.0, true);
      if (!x0) continue;
      const LDValue ld = evaluate(model, *x0, cfg);
      if (ld.status != LDStatus::Ok) continue;
      out.ld[i] = ld.value;
      out.mask[i] = 1;
    }
  });

  for (int i = 0; i < n; ++i) {
    int d0, d1, d2;
    if (i == 0) {
      d0 = 0; d1 = 1; d2 = 2;
    } else if (i == n - 1) {
      d0 = n - 1; d1 = n - 2; d2 = n - 3;
    } else {
      d0 = i; d1 = i - 1; d2 = i + 1;
    }
    if (!(out.mask[d0] && out.mask[d1] && out.mask[d2])) continue;
    const double v = (i == 0 || i == n - 1)
                         ? out.ld[d0] - 2.0 * out.ld[d1] + out.ld[d2]
                         : out.ld[i + 1] + out.ld[i - 1] - 2.0 * out.ld[i];
    out.second_diff[i] = std::abs(v);
  }
  return out;
}

// Second difference along one axis with the unit-mesh convention; `get`
// addresses the lattice along that axis.
template <class Get>
double d2_line(const Get& get, int idx, int n) {
  if (idx == 0) return get(0) - 2.0 * get(1) + get(2);
  if (idx == n - 1) return get(n - 1) - 2.0 * get(n - 2) + get(n - 3);
  return get(idx + 1) + get(idx - 1) - 2.0 * get(idx);
}

template <class Get>
double grad_line(const Get& get, int idx, int n) {
  if (idx == 0) return get(1) - get(0);
  if (idx == n - 1) return get(n - 1) - get(n - 2);
  return 0.5 * (get(idx + 1) - get(idx - 1));
}

// Stencil footprint along one axis, used for mask propagation.
void d2_deps(int idx, int n, int deps[3]) {
  if (idx == 0) {
    deps[0] = 0; deps[1] = 1; deps[2] = 2;
  } else if (idx == n - 1) {
    deps[0] = n - 3; deps[1] = n - 2; deps[2] = n - 1;
  } else {
    deps[0] = idx - 1; deps[1] = idx; deps[2] = idx + 1;
  }
}

void grad_deps(int idx, int n, int deps[3]) {
  if (idx == 0) {
    deps[0] = 0; deps[1] = 1; deps[2] = 1;
  } else if (idx == n - 1) {
    deps[0] = n - 2; deps[1] = n - 1; deps[2] = n - 1;
  } else {
    deps[0] = idx - 1; deps[1] = idx + 1; deps[2] = idx + 1;
  }
}

ScalarField make_like(const ScalarField& src) {
  ScalarField out;
  out.n1 = src.n1;
  out.n2 = src.n2;
  out.values.assign(src.values.size(), nanv);
  out.mask.assign(src.mask.size(), 0);
  out.h1 = src.h1;
  out.h2 = src.h2;
  out.axis1 = src.axis1;
  out.axis2 = src.axis2;
  return out;
}

}  // namespace

ScalarField sweep(const FlowModel& model, const SectionSpec& section, const LDConfig& cfg,
                  int threads) {
  cfg.validate_flow(model);
  return sweep_impl(model, section, cfg, threads);
}

ScalarField sweep(const MapModel& model, const SectionSpec& section, const LDConfig& cfg,
                  int threads) {
  cfg.validate_map();
  return sweep_impl(model, section, cfg, threads);
}

std::vector<std::uint8_t> admissibility_mask(const FlowModel& model, const SectionSpec& s) {
  validate_section(model, s, s.line_mode);
  const int n = s.resolution;
  const double h1 = s.spacing1();
  const double h2 = s.line_mode ? 0.0 : s.spacing2();
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(n) * (s.line_mode ? 1 : n), 0);
  const int rows = s.line_mode ? 1 : n;
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < n; ++i) {
      const auto x0 = node_state(model, s, s.axis1.lo + i * h1, s.axis2.lo + j * h2, s.line_mode);
      if (x0) mask[static_cast<std::size_t>(j) * n + i] = 1;
    }
  }
  return mask;
}

ScalarField second_diff_field(const ScalarField& field) {
  if (field.n1 < 3 || field.n2 < 3) throw std::invalid_argument("stencils need at least 3 nodes per axis");
  ScalarField out = make_like(field);
  for (int j = 0; j < field.n2; ++j) {
    for (int i = 0; i < field.n1; ++i) {
      int di[3], dj[3];
      d2_deps(i, field.n1, di);
      d2_deps(j, field.n2, dj);
      bool ok = true;
      for (int d : di) ok = ok && field.admissible(d, j);
      for (int d : dj) ok = ok && field.admissible(i, d);
      if (!ok) continue;
      const double a1 = d2_line([&](int idx) { return field.at(idx, j); }, i, field.n1);
      const double a2 = d2_line([&](int idx) { return field.at(i, idx); }, j, field.n2);
      out.at(i, j) = std::abs(a1) + std::abs(a2);
      out.mask[static_cast<std::size_t>(j) * field.n1 + i] = 1;
    }
  }
  return out;
}

ScalarField gradient_norm_field(const ScalarField& field) {
  if (field.n1 < 3 || field.n2 < 3) throw std::invalid_argument("stencils need at least 3 nodes per axis");
  ScalarField out = make_like(field);
  for (int j = 0; j < field.n2; ++j) {
    for (int i = 0; i < field.n1; ++i) {
      int di[3], dj[3];
      grad_deps(i, field.n1, di);
      grad_deps(j, field.n2, dj);
      bool ok = true;
      for (int d : di) ok = ok && field.admissible(d, j);
      for (int d : dj) ok = ok && field.admissible(i, d);
      if (!ok) continue;
      const double g1 = grad_line([&](int idx) { return field.at(idx, j); }, i, field.n1);
      const double g2 = grad_line([&](int idx) { return field.at(i, idx); }, j, field.n2);
      out.at(i, j) = std::sqrt(g1 * g1 + g2 * g2);
      out.mask[static_cast<std::size_t>(j) * field.n1 + i] = 1;
    }
  }
  return out;
}

ScalarField log10_transform(ScalarField field, double floor_value) {
  if (!(floor_value > 0.0)) throw std::invalid_argument("log floor must be positive");
  for (std::size_t idx = 0; idx < field.values.size(); ++idx) {
    if (!field.mask[idx]) continue;
    field.values[idx] = std::log10(std::max(field.values[idx], floor_value));
  }
  return field;
}

Landscape landscape_1d(const FlowModel& model, const SectionSpec& section, const LDConfig& cfg,
                       int threads) {
  cfg.validate_flow(model);
  return landscape_impl(model, section, cfg, threads);
}

Landscape landscape_1d(const MapModel& model, const SectionSpec& section, const LDConfig& cfg,
                       int threads) {
  cfg.validate_map();
  return landscape_impl(model, section, cfg, threads);
}

}  // namespace ldc
