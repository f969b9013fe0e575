#ifndef LDC_LD_HPP
#define LDC_LD_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "ldc/integrate.hpp"
#include "ldc/models.hpp"
#include "ldc/state.hpp"

namespace ldc {

enum class Observable : std::uint8_t {
  ArcLength,  // Euclidean norm of the velocity / step displacement
  PNorm,      // sum_i |v_i|^p, p in (0, 1]
  Action2T,   // twice the kinetic energy (kinetic + potential models only)
};

enum class Direction : std::uint8_t { Forward, Backward, Both };

struct LDConfig {
  Observable observable = Observable::ArcLength;
  double p = 1.0;
  Direction direction = Direction::Forward;
  double final_time = 100.0;   // flows: window [0, t] (and [-t, 0] backward)
  long long iterates = 150;    // maps
  IntegratorConfig integrator{};

  void validate_flow(const FlowModel& model) const {
    if (!(final_time > 0.0) || !std::isfinite(final_time))
      throw std::invalid_argument("final_time must be positive and finite");
    integrator.validate();
    validate_observable(model.kind == FlowKind::HenonHeiles);
  }

  void validate_map() const {
    if (iterates < 1) throw std::invalid_argument("iterates must be >= 1");
    validate_observable(false);
  }

 private:
  void validate_observable(bool action_allowed) const {
    if (observable == Observable::PNorm && !(p > 0.0 && p <= 1.0))
      throw std::invalid_argument("p-norm exponent must lie in (0, 1]");
    if (observable == Observable::Action2T && !action_allowed)
      throw std::invalid_argument("Action2T requires a kinetic + potential model");
  }
};

enum class LDStatus : std::uint8_t { Ok, NonAdmissible, Escaped };

struct LDValue {
  double value = 0.0;
  LDStatus status = LDStatus::Ok;
};

// LD of a flow trajectory. The observable rate is advanced as an extra
// component of the RK4 state, so the quadrature shares the trajectory's
// fourth-order accuracy. Escaped trajectories report the value accumulated
// up to the last finite step.
LDValue ld_flow(const FlowModel& model, const StateVector& x0, const LDConfig& cfg);

// Discrete LD: sum over iterates of the observable applied to the
// pre-modulus step displacement.
LDValue ld_map(const MapModel& model, const StateVector& z0, const LDConfig& cfg);

// Length of the pendulum level curve H(I, phi) = E on the cylinder
// phi in [-pi, pi], parameterized by energy alone. Libration levels
// (-1 < E < 1) count the closed curve once; circulation levels (E > 1)
// report the single I > 0 branch. E <= -1 and the separatrix E = 1 are
// out of domain.
double geometric_ld_pendulum(double energy, double quad_tol = 1e-8);

}  // namespace ldc

#endif
