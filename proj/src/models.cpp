#include "ldc/models.hpp"

#include <algorithm>
#include <numeric>

namespace ldc {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string("non-finite parameter ") + name);
}

void require_dim(int expected, const StateVector& state) {
  if (static_cast<int>(state.size()) != expected)
    throw std::invalid_argument("state dimension does not match model");
}

}  // namespace

FlowModel FlowModel::modulated_pendulum(double mu) {
  require_finite(mu, "mu");
  return {FlowKind::ModulatedPendulum, mu, 0.0};
}

FlowModel FlowModel::chirikov_overlap(double eps, double mu) {
  require_finite(eps, "eps");
  require_finite(mu, "mu");
  return {FlowKind::ChirikovOverlap, mu, eps};
}

FlowModel FlowModel::fgl(double eps) {
  require_finite(eps, "eps");
  return {FlowKind::Fgl, 0.0, eps};
}

MapModel MapModel::standard_map(double k) {
  require_finite(k, "k");
  if (k < 0.0) throw std::invalid_argument("standard map requires k >= 0");
  MapModel m;
  m.kind = MapKind::StandardMap;
  m.k = k;
  return m;
}

MapModel MapModel::froeschle_4d(double eps) {
  require_finite(eps, "eps");
  MapModel m;
  m.kind = MapKind::Froeschle4d;
  m.eps = eps;
  return m;
}

MapModel MapModel::generalized_froeschle(double a, double b, double c, double phase) {
  require_finite(a, "a");
  require_finite(b, "b");
  require_finite(c, "c");
  require_finite(phase, "phase");
  MapModel m;
  m.kind = MapKind::GeneralizedFroeschle;
  m.a = a;
  m.b = b;
  m.c = c;
  m.phase = phase;
  return m;
}

StateVector flow_rhs(const FlowModel& model, const StateVector& state, double t) {
  require_dim(model.dim(), state);
  StateVector dx(state.size());
  with_flow_rhs(model, [&](auto rhs) { rhs(state, t, dx); });
  return dx;
}

double hamiltonian(const FlowModel& model, const StateVector& state) {
  require_dim(model.dim(), state);
  switch (model.kind) {
    case FlowKind::Pendulum:
      return 0.5 * state[0] * state[0] - std::cos(state[1]);
    case FlowKind::ModulatedPendulum: {
      const double I = state[0], J = state[1], phi = state[2], tau = state[3];
      return 0.5 * I * I + J - (1.0 + model.mu * std::sin(tau)) * std::cos(phi);
    }
    case FlowKind::ChirikovOverlap: {
      const double I = state[0], A = state[1], phi = state[2], tau = state[3];
      return 0.5 * I * I - I * I * I / 3.0 - (model.eps / 12.0) * std::cos(phi) +
             model.mu * std::cos(2.0 * I + phi + tau) + A;
    }
    case FlowKind::Fgl: {
      const double d = std::cos(state[3]) + std::cos(state[4]) + std::cos(state[5]) + 4.0;
      return 0.5 * state[0] * state[0] + 0.5 * state[1] * state[1] + state[2] + model.eps / d;
    }
    case FlowKind::HenonHeiles: {
      const double x = state[0], y = state[1], px = state[2], py = state[3];
      return 0.5 * (px * px + py * py + x * x + y * y) + x * x * y - y * y * y / 3.0;
    }
  }
  throw std::logic_error("hamiltonian: unknown model kind");
}

MapStepResult map_step(const MapModel& model, const StateVector& state) {
  require_dim(model.dim(), state);
  MapStepResult r{StateVector(state.size()), StateVector(state.size())};
  with_map_step(model, [&](auto step) { step(state, r.next, r.displacement); });
  return r;
}

std::vector<std::array<int, 3>> fgl_resonance_lines(int max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  std::vector<std::array<int, 3>> lines;
  for (int k1 = -max_order; k1 <= max_order; ++k1) {
    for (int k2 = -max_order; k2 <= max_order; ++k2) {
      for (int k3 = -max_order; k3 <= max_order; ++k3) {
        const int order = std::abs(k1) + std::abs(k2) + std::abs(k3);
        if (order == 0 || order > max_order) continue;
        const int g = std::gcd(std::gcd(std::abs(k1), std::abs(k2)), std::abs(k3));
        if (g != 1) continue;
        const int first = k1 != 0 ? k1 : (k2 != 0 ? k2 : k3);
        if (first < 0) continue;
        lines.push_back({k1, k2, k3});
      }
    }
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::vector<std::string> coordinate_names(const FlowModel& model) {
  switch (model.kind) {
    case FlowKind::Pendulum: return {"I", "phi"};
    case FlowKind::ModulatedPendulum: return {"I", "J", "phi", "tau"};
    case FlowKind::ChirikovOverlap: return {"I", "A", "phi", "tau"};
    case FlowKind::Fgl: return {"I1", "I2", "I3", "phi1", "phi2", "phi3"};
    case FlowKind::HenonHeiles: return {"x", "y", "px", "py"};
  }
  return {};
}

std::vector<std::string> coordinate_names(const MapModel& model) {
  switch (model.kind) {
    case MapKind::StandardMap: return {"x", "y"};
    case MapKind::Froeschle4d: return {"x", "y", "z", "t"};
    case MapKind::GeneralizedFroeschle: return {"x1", "x2", "y1", "y2"};
  }
  return {};
}

void set_param(FlowModel& model, const std::string& name, double value) {
  require_finite(value, name.c_str());
  const bool has_mu = model.kind == FlowKind::ModulatedPendulum || model.kind == FlowKind::ChirikovOverlap;
  const bool has_eps = model.kind == FlowKind::ChirikovOverlap || model.kind == FlowKind::Fgl;
  if (name == "mu" && has_mu) {
    model.mu = value;
    return;
  }
  if (name == "eps" && has_eps) {
    model.eps = value;
    return;
  }
  throw std::invalid_argument("unknown model parameter: " + name);
}

void set_param(MapModel& model, const std::string& name, double value) {
  require_finite(value, name.c_str());
  switch (model.kind) {
    case MapKind::StandardMap:
      if (name == "k") {
        if (value < 0.0) throw std::invalid_argument("standard map requires k >= 0");
        model.k = value;
        return;
      }
      break;
    case MapKind::Froeschle4d:
      if (name == "eps") {
        model.eps = value;
        return;
      }
      break;
    case MapKind::GeneralizedFroeschle:
      if (name == "a") { model.a = value; return; }
      if (name == "b") { model.b = value; return; }
      if (name == "c") { model.c = value; return; }
      if (name == "phase") { model.phase = value; return; }
      break;
  }
  throw std::invalid_argument("unknown model parameter: " + name);
}

std::vector<std::pair<std::string, double>> params(const FlowModel& model) {
  switch (model.kind) {
    case FlowKind::Pendulum: return {};
    case FlowKind::ModulatedPendulum: return {{"mu", model.mu}};
    case FlowKind::ChirikovOverlap: return {{"eps", model.eps}, {"mu", model.mu}};
    case FlowKind::Fgl: return {{"eps", model.eps}};
    case FlowKind::HenonHeiles: return {};
  }
  return {};
}

std::vector<std::pair<std::string, double>> params(const MapModel& model) {
  switch (model.kind) {
    case MapKind::StandardMap: return {{"k", model.k}};
    case MapKind::Froeschle4d: return {{"eps", model.eps}};
    case MapKind::GeneralizedFroeschle:
      return {{"a", model.a}, {"b", model.b}, {"c", model.c}, {"phase", model.phase}};
  }
  return {};
}

}  // namespace ldc
