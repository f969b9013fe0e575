#ifndef LDC_INTEGRATE_HPP
#define LDC_INTEGRATE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "ldc/models.hpp"
#include "ldc/state.hpp"

namespace ldc {

enum class Scheme : std::uint8_t { Rk4 };

struct IntegratorConfig {
  double step = 1e-2;
  Scheme scheme = Scheme::Rk4;

  void validate() const {
    if (!(step > 0.0) || !std::isfinite(step))
      throw std::invalid_argument("integrator step must be positive and finite");
  }
};

// Any coordinate beyond this magnitude aborts the trajectory.
inline constexpr double divergence_guard = 1e12;

enum class PropagationStatus : std::uint8_t { Ok, Escaped };

// Classical fourth-order Runge-Kutta update. Negative h integrates backward.
template <class Rhs>
StateVector rk4_step(Rhs&& rhs, const StateVector& x, double t, double h) {
  const std::size_t n = x.size();
  StateVector k1(n), k2(n), k3(n), k4(n), tmp(n);
  rhs(x, t, k1);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
  rhs(tmp, t + 0.5 * h, k2);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
  rhs(tmp, t + 0.5 * h, k3);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
  rhs(tmp, t + h, k4);
  StateVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = x[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

namespace detail {

struct NoObserver {};

inline bool state_ok(const StateVector& x) {
  for (double c : x) {
    if (!std::isfinite(c) || std::abs(c) > divergence_guard) return false;
  }
  return true;
}

// Uniform steps of size cfg.step covering [t0, t1], with one final partial
// step when the window is not an exact multiple of the step.
template <class Rhs, class Observer>
PropagationStatus run_fixed_steps(Rhs&& rhs, StateVector& x, double t0, double t1,
                                  const IntegratorConfig& cfg, Observer&& observer) {
  const double span = std::abs(t1 - t0);
  if (span == 0.0) return PropagationStatus::Ok;
  const double direction = t1 >= t0 ? 1.0 : -1.0;
  const double h = direction * cfg.step;

  auto nfull = static_cast<long long>(std::floor(span / cfg.step * (1.0 + 1e-14) + 1e-12));
  double remainder = span - static_cast<double>(nfull) * cfg.step;
  if (remainder < 1e-9 * cfg.step) remainder = 0.0;

  double t = t0;
  for (long long i = 0; i < nfull; ++i) {
    x = rk4_step(rhs, x, t, h);
    t = t0 + static_cast<double>(i + 1) * h;
    if (!state_ok(x)) return PropagationStatus::Escaped;
    if constexpr (!std::is_same_v<std::decay_t<Observer>, NoObserver>) {
      StateVector dx(x.size());
      rhs(x, t, dx);
      observer(t, x, dx);
    }
  }
  if (remainder > 0.0) {
    x = rk4_step(rhs, x, t, direction * remainder);
    t = t1;
    if (!state_ok(x)) return PropagationStatus::Escaped;
    if constexpr (!std::is_same_v<std::decay_t<Observer>, NoObserver>) {
      StateVector dx(x.size());
      rhs(x, t, dx);
      observer(t, x, dx);
    }
  }
  return PropagationStatus::Ok;
}

}  // namespace detail

struct PropagateResult {
  StateVector state;
  PropagationStatus status = PropagationStatus::Ok;
};

// Propagate a flow model over [t0, t1] (direction from the sign of t1 - t0).
// The observer is called after every step with (t, state, rhs(state, t)).
template <class Observer>
PropagateResult propagate(const FlowModel& model, const StateVector& x0, double t0, double t1,
                          const IntegratorConfig& cfg, Observer&& observer) {
  cfg.validate();
  if (static_cast<int>(x0.size()) != model.dim())
    throw std::invalid_argument("state dimension does not match model");
  if (!std::isfinite(t0) || !std::isfinite(t1))
    throw std::invalid_argument("window must be finite");
  if (!x0.all_finite()) throw std::invalid_argument("initial state must be finite");

  PropagateResult result{x0, PropagationStatus::Ok};
  result.status = with_flow_rhs(model, [&](auto rhs) {
    return detail::run_fixed_steps(rhs, result.state, t0, t1, cfg, observer);
  });
  return result;
}

inline PropagateResult propagate(const FlowModel& model, const StateVector& x0, double t0,
                                 double t1, const IntegratorConfig& cfg) {
  return propagate(model, x0, t0, t1, cfg, detail::NoObserver{});
}

}  // namespace ldc

#endif
