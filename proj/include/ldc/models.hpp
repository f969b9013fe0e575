#ifndef LDC_MODELS_HPP
#define LDC_MODELS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldc/state.hpp"

namespace ldc {

// ---------------------------------------------------------------------------
// Continuous models
// ---------------------------------------------------------------------------

enum class FlowKind : std::uint8_t {
  Pendulum,           // (I, phi)
  ModulatedPendulum,  // extended (I, J, phi, tau)
  ChirikovOverlap,    // extended (I, A, phi, tau)
  Fgl,                // (I1, I2, I3, phi1, phi2, phi3)
  HenonHeiles,        // (x, y, px, py)
};

struct FlowModel {
  FlowKind kind = FlowKind::Pendulum;
  double mu = 0.0;
  double eps = 0.0;

  int dim() const {
    switch (kind) {
      case FlowKind::Pendulum: return 2;
      case FlowKind::ModulatedPendulum: return 4;
      case FlowKind::ChirikovOverlap: return 4;
      case FlowKind::Fgl: return 6;
      case FlowKind::HenonHeiles: return 4;
    }
    return 0;
  }

  static FlowModel pendulum() { return {FlowKind::Pendulum, 0.0, 0.0}; }
  static FlowModel modulated_pendulum(double mu);
  static FlowModel chirikov_overlap(double eps, double mu);
  static FlowModel fgl(double eps);
  static FlowModel henon_heiles() { return {FlowKind::HenonHeiles, 0.0, 0.0}; }
};

// ---------------------------------------------------------------------------
// Discrete models
// ---------------------------------------------------------------------------

enum class MapKind : std::uint8_t {
  StandardMap,           // (x, y), x mod 1
  Froeschle4d,           // (x, y, z, t), y and t mod 2*pi
  GeneralizedFroeschle,  // (x1, x2, y1, y2), x1 and x2 mod 1
};

struct MapModel {
  MapKind kind = MapKind::StandardMap;
  double k = 0.0;                              // StandardMap
  double eps = 0.0;                            // Froeschle4d
  double a = 0.0, b = 0.0, c = 0.0, phase = 0.0;  // GeneralizedFroeschle

  int dim() const { return kind == MapKind::StandardMap ? 2 : 4; }

  // Per-coordinate wrap period, 0 = unbounded.
  std::array<double, 4> wrap() const {
    switch (kind) {
      case MapKind::StandardMap: return {1.0, 0.0, 0.0, 0.0};
      case MapKind::Froeschle4d: return {0.0, 2.0 * std::numbers::pi, 0.0, 2.0 * std::numbers::pi};
      case MapKind::GeneralizedFroeschle: return {1.0, 1.0, 0.0, 0.0};
    }
    return {};
  }

  static MapModel standard_map(double k);
  static MapModel froeschle_4d(double eps);
  static MapModel generalized_froeschle(double a, double b, double c, double phase);
};

// ---------------------------------------------------------------------------
// Right-hand sides. One functor per model so the integrators stay
// monomorphic; dispatch happens once per trajectory, not per step. The
// raw-pointer overload carries a compile-time dimension for the LD hot loop;
// the StateVector overload serves the generic integrator.
// ---------------------------------------------------------------------------

struct PendulumRhs {
  static constexpr int dim = 2;
  void operator()(const double* x, double /*t*/, double* dx) const {
    dx[0] = -std::sin(x[1]);  // dI/dt
    dx[1] = x[0];             // dphi/dt
  }
  void operator()(const StateVector& x, double t, StateVector& dx) const {
    (*this)(x.begin(), t, dx.begin());
  }
};

struct ModulatedPendulumRhs {
  static constexpr int dim = 4;
  double mu;
  void operator()(const double* x, double /*t*/, double* dx) const {
    const double phi = x[2], tau = x[3];
    dx[0] = -(1.0 + mu * std::sin(tau)) * std::sin(phi);
    dx[1] = mu * std::cos(tau) * std::cos(phi);
    dx[2] = x[0];
    dx[3] = 1.0;
  }
  void operator()(const StateVector& x, double t, StateVector& dx) const {
    (*this)(x.begin(), t, dx.begin());
  }
};

struct ChirikovOverlapRhs {
  static constexpr int dim = 4;
  double eps, mu;
  void operator()(const double* x, double /*t*/, double* dx) const {
    const double I = x[0], phi = x[2], tau = x[3];
    const double s = std::sin(2.0 * I + phi + tau);
    dx[0] = -(eps / 12.0) * std::sin(phi) + mu * s;
    dx[1] = mu * s;
    dx[2] = I - I * I - 2.0 * mu * s;
    dx[3] = 1.0;
  }
  void operator()(const StateVector& x, double t, StateVector& dx) const {
    (*this)(x.begin(), t, dx.begin());
  }
};

struct FglRhs {
  static constexpr int dim = 6;
  double eps;
  void operator()(const double* x, double /*t*/, double* dx) const {
    const double d = std::cos(x[3]) + std::cos(x[4]) + std::cos(x[5]) + 4.0;
    const double g = eps / (d * d);
    dx[0] = -g * std::sin(x[3]);
    dx[1] = -g * std::sin(x[4]);
    dx[2] = -g * std::sin(x[5]);
    dx[3] = x[0];
    dx[4] = x[1];
    dx[5] = 1.0;
  }
  void operator()(const StateVector& x, double t, StateVector& dx) const {
    (*this)(x.begin(), t, dx.begin());
  }
};

struct HenonHeilesRhs {
  static constexpr int dim = 4;
  void operator()(const double* x, double /*t*/, double* dx) const {
    const double qx = x[0], qy = x[1];
    dx[0] = x[2];
    dx[1] = x[3];
    dx[2] = -qx - 2.0 * qx * qy;
    dx[3] = -qy - qx * qx + qy * qy;
  }
  void operator()(const StateVector& x, double t, StateVector& dx) const {
    (*this)(x.begin(), t, dx.begin());
  }
};

template <class Fn>
decltype(auto) with_flow_rhs(const FlowModel& m, Fn&& fn) {
  switch (m.kind) {
    case FlowKind::Pendulum: return fn(PendulumRhs{});
    case FlowKind::ModulatedPendulum: return fn(ModulatedPendulumRhs{m.mu});
    case FlowKind::ChirikovOverlap: return fn(ChirikovOverlapRhs{m.eps, m.mu});
    case FlowKind::Fgl: return fn(FglRhs{m.eps});
    case FlowKind::HenonHeiles: return fn(HenonHeilesRhs{});
  }
  throw std::logic_error("with_flow_rhs: unknown model kind");
}

StateVector flow_rhs(const FlowModel& model, const StateVector& state, double t);

// Hamiltonian evaluated at a state; extended models include the conjugate
// clock action, so the value is conserved along the extended flow.
double hamiltonian(const FlowModel& model, const StateVector& state);

// ---------------------------------------------------------------------------
// One-step maps. `disp` receives the pre-modulus increment z' - z; LD
// accumulation uses it so that the integrable oracle n*|y0| holds.
// ---------------------------------------------------------------------------

inline double wrap_coord(double v, double period) {
  return v - period * std::floor(v / period);
}

struct StandardMapStep {
  double k;
  void operator()(const StateVector& z, StateVector& next, StateVector& disp) const {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double f = -k * std::sin(two_pi * z[0]) / two_pi;
    disp[0] = z[1] + f;
    disp[1] = f;
    next[0] = wrap_coord(z[0] + disp[0], 1.0);
    next[1] = z[1] + f;
  }
};

struct Froeschle4dStep {
  double eps;
  void operator()(const StateVector& z, StateVector& next, StateVector& disp) const {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double x = z[0], y = z[1], zz = z[2], t = z[3];
    const double d = std::cos(x + y) + std::cos(zz + t) + 4.0;
    const double m = d * d;
    disp[0] = -eps * std::sin(x + y) / m;
    disp[1] = x;
    disp[2] = -eps * std::sin(zz + t) / m;
    disp[3] = zz;
    next[0] = x + disp[0];
    next[1] = wrap_coord(y + x, two_pi);
    next[2] = zz + disp[2];
    next[3] = wrap_coord(t + zz, two_pi);
  }
};

struct GeneralizedFroeschleStep {
  double a, b, c, phase;
  void operator()(const StateVector& z, StateVector& next, StateVector& disp) const {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double x1 = z[0], x2 = z[1], y1 = z[2], y2 = z[3];
    const double coupling = c * std::sin(two_pi * (x1 + x2));
    const double f1 = (a * std::sin(two_pi * x1) + coupling) / two_pi;
    const double f2 = (b * std::sin(two_pi * x2) + coupling) / two_pi;
    // The phase enters the y2 forcing only; x2 keeps the phase-free coupling.
    const double f2p = (b * std::sin(two_pi * x2) + c * std::sin(two_pi * (x1 + x2 + phase))) / two_pi;
    disp[0] = y1 - f1;
    disp[1] = y2 - f2;
    disp[2] = -f1;
    disp[3] = -f2p;
    next[0] = wrap_coord(x1 + disp[0], 1.0);
    next[1] = wrap_coord(x2 + disp[1], 1.0);
    next[2] = y1 - f1;
    next[3] = y2 - f2p;
  }
};

template <class Fn>
decltype(auto) with_map_step(const MapModel& m, Fn&& fn) {
  switch (m.kind) {
    case MapKind::StandardMap: return fn(StandardMapStep{m.k});
    case MapKind::Froeschle4d: return fn(Froeschle4dStep{m.eps});
    case MapKind::GeneralizedFroeschle: return fn(GeneralizedFroeschleStep{m.a, m.b, m.c, m.phase});
  }
  throw std::logic_error("with_map_step: unknown map kind");
}

struct MapStepResult {
  StateVector next;
  StateVector displacement;
};

MapStepResult map_step(const MapModel& model, const StateVector& state);

// ---------------------------------------------------------------------------
// Section helpers and test oracles
// ---------------------------------------------------------------------------

// Momentum completing an x = 0 section point of the Henon-Heiles system to
// the energy surface H = E, px > 0. Non-admissible points return nullopt.
inline std::optional<double> hh_lift(double y, double p_y, double energy) {
  const double radicand = 2.0 * energy - p_y * p_y - y * y + (2.0 / 3.0) * y * y * y;
  if (!(radicand > 0.0)) return std::nullopt;
  return std::sqrt(radicand);
}

// Integer vectors (k1,k2,k3) with 0 < |k1|+|k2|+|k3| <= max_order, gcd 1 and
// the first nonzero component positive. k1*I1 + k2*I2 + k3 = 0 is a line in
// the (I1,I2) action plane whenever (k1,k2) != (0,0).
std::vector<std::array<int, 3>> fgl_resonance_lines(int max_order);

// Nonnegative branch of the pendulum level curve I(phi; E), or nullopt when
// E + cos(phi) < 0.
inline std::optional<double> pendulum_level_curve(double energy, double phi) {
  const double arg = energy + std::cos(phi);
  if (arg < 0.0) return std::nullopt;
  return std::sqrt(2.0 * arg);
}

// Coordinate labels in state order, used by scenario files and CSV headers.
std::vector<std::string> coordinate_names(const FlowModel& model);
std::vector<std::string> coordinate_names(const MapModel& model);

// Named-parameter access for scenario overrides. Throws on unknown name or
// non-finite value.
void set_param(FlowModel& model, const std::string& name, double value);
void set_param(MapModel& model, const std::string& name, double value);
std::vector<std::pair<std::string, double>> params(const FlowModel& model);
std::vector<std::pair<std::string, double>> params(const MapModel& model);

}  // namespace ldc

#endif
