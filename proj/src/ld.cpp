#include "ldc/ld.hpp"

#include <algorithm>

namespace ldc {

namespace {

// --- observable rates -------------------------------------------------------

struct ArcLengthRate {
  double operator()(const double* /*x*/, const double* v, int n) const {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += v[i] * v[i];
    return std::sqrt(s);
  }
};

struct PNormRate {
  double p;
  double operator()(const double* /*x*/, const double* v, int n) const {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::pow(std::abs(v[i]), p);
    return s;
  }
};

// Twice the kinetic energy; momenta are the trailing half of a
// kinetic + potential state such as the Henon-Heiles (x, y, px, py).
struct Action2TRate {
  double operator()(const double* x, const double* /*v*/, int n) const {
    double s = 0.0;
    for (int i = n / 2; i < n; ++i) s += x[i] * x[i];
    return s;
  }
};

template <class Fn>
LDValue with_rate(const LDConfig& cfg, Fn&& fn) {
  switch (cfg.observable) {
    case Observable::ArcLength: return fn(ArcLengthRate{});
    case Observable::PNorm: return fn(PNormRate{cfg.p});
    case Observable::Action2T: return fn(Action2TRate{});
  }
  throw std::logic_error("unknown observable");
}

// --- flow LD ----------------------------------------------------------------

// The quadrature channel is slot n of the augmented state; compile-time
// dimensions let the stage loops unroll.
template <class Rhs, class Rate>
struct AugmentedRhs {
  static constexpr int n = Rhs::dim;
  Rhs rhs;
  Rate rate;
  void operator()(const double* x, double t, double* dx) const {
    rhs(x, t, dx);
    dx[n] = rate(x, dx, n);
  }
};

template <class Aug, int M>
inline void rk4_step_raw(const Aug& aug, double (&x)[M], double t, double h) {
  double k1[M], k2[M], k3[M], k4[M], tmp[M];
  aug(x, t, k1);
  for (int i = 0; i < M; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
  aug(tmp, t + 0.5 * h, k2);
  for (int i = 0; i < M; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
  aug(tmp, t + 0.5 * h, k3);
  for (int i = 0; i < M; ++i) tmp[i] = x[i] + h * k3[i];
  aug(tmp, t + h, k4);
  for (int i = 0; i < M; ++i) x[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

template <int M>
inline bool raw_state_ok(const double (&x)[M]) {
  for (int i = 0; i < M; ++i)
    if (!std::isfinite(x[i]) || std::abs(x[i]) > divergence_guard) return false;
  return true;
}

template <class Rhs, class Rate>
LDValue run_ld_flow(Rhs rhs, Rate rate, const StateVector& x0, double t_signed,
                    const IntegratorConfig& ic) {
  constexpr int n = Rhs::dim;
  constexpr int m = n + 1;
  double x[m];
  for (int i = 0; i < n; ++i) x[i] = x0[i];
  x[n] = 0.0;

  const AugmentedRhs<Rhs, Rate> aug{rhs, rate};
  const double span = std::abs(t_signed);
  const double h = t_signed >= 0.0 ? ic.step : -ic.step;
  auto nfull = static_cast<long long>(std::floor(span / ic.step * (1.0 + 1e-14) + 1e-12));
  double remainder = span - static_cast<double>(nfull) * ic.step;
  if (remainder < 1e-9 * ic.step) remainder = 0.0;

  double accumulated = 0.0;
  double t = 0.0;
  for (long long i = 0; i < nfull; ++i) {
    rk4_step_raw(aug, x, t, h);
    t = static_cast<double>(i + 1) * h;
    if (!raw_state_ok(x)) return {accumulated, LDStatus::Escaped};
    accumulated = std::abs(x[n]);
  }
  if (remainder > 0.0) {
    rk4_step_raw(aug, x, t, std::copysign(remainder, h));
    if (!raw_state_ok(x)) return {accumulated, LDStatus::Escaped};
    accumulated = std::abs(x[n]);
  }
  return {accumulated, LDStatus::Ok};
}

// --- map LD -----------------------------------------------------------------

template <class Step, class Rate>
LDValue run_ld_map(Step step, Rate rate, StateVector z, long long iterates) {
  const int n = static_cast<int>(z.size());
  StateVector next(z.size()), disp(z.size());
  double accumulated = 0.0;
  for (long long j = 0; j < iterates; ++j) {
    step(z, next, disp);
    accumulated += rate(z.begin(), disp.begin(), n);
    z = next;
    if (!detail::state_ok(z)) return {accumulated, LDStatus::Escaped};
  }
  return {accumulated, LDStatus::Ok};
}

// --- adaptive quadrature ----------------------------------------------------

template <class F>
double simpson_recurse(const F& f, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

LDValue ld_flow(const FlowModel& model, const StateVector& x0, const LDConfig& cfg) {
  if (static_cast<int>(x0.size()) != model.dim())
    throw std::invalid_argument("state dimension does not match model");
  if (!x0.all_finite()) throw std::invalid_argument("initial state must be finite");
  cfg.validate_flow(model);

  auto run_one = [&](double t_signed) {
    return with_flow_rhs(model, [&](auto rhs) {
      return with_rate(cfg, [&](auto rate) {
        return run_ld_flow(rhs, rate, x0, t_signed, cfg.integrator);
      });
    });
  };

  switch (cfg.direction) {
    case Direction::Forward: return run_one(cfg.final_time);
    case Direction::Backward: return run_one(-cfg.final_time);
    case Direction::Both: {
      const LDValue fwd = run_one(cfg.final_time);
      const LDValue bwd = run_one(-cfg.final_time);
      const LDStatus status =
          (fwd.status == LDStatus::Escaped || bwd.status == LDStatus::Escaped)
              ? LDStatus::Escaped
              : LDStatus::Ok;
      return LDValue{fwd.value + bwd.value, status};
    }
  }
  throw std::logic_error("unknown direction");
}

LDValue ld_map(const MapModel& model, const StateVector& z0, const LDConfig& cfg) {
  if (static_cast<int>(z0.size()) != model.dim())
    throw std::invalid_argument("state dimension does not match model");
  if (!z0.all_finite()) throw std::invalid_argument("initial state must be finite");
  cfg.validate_map();
  return with_map_step(model, [&](auto step) {
    return with_rate(cfg, [&](auto rate) { return run_ld_map(step, rate, z0, cfg.iterates); });
  });
}

double geometric_ld_pendulum(double energy, double quad_tol) {
  if (!(energy > -1.0)) throw std::domain_error("level curve degenerate for E <= -1");
  if (energy == 1.0) throw std::domain_error("separatrix energy is a limit, not a value");
  if (!(quad_tol > 0.0)) throw std::invalid_argument("quad_tol must be positive");

  const auto integrand_phi = [energy](double phi) {
    const double s = std::sin(phi);
    return std::sqrt(1.0 + s * s / (2.0 * (energy + std::cos(phi))));
  };

  if (energy > 1.0) {
    // Circulation: single I > 0 branch over the full angle range.
    return 2.0 * adaptive_simpson(integrand_phi, 0.0, std::numbers::pi, 0.5 * quad_tol);
  }

  // Libration: the branch I(phi) = sqrt(2(E + cos phi)) has a vertical
  // tangent at the turning angle; the substitution u^2 = E + cos(phi)
  // removes the singular Jacobian near it. The plain phi parameterization
  // is kept away from the turning point, split where u^2 = (E + 1)/2.
  const auto integrand_u = [energy](double u) {
    const double c = u * u - energy;  // cos(phi)
    const double s2 = 1.0 - c * c;    // sin^2(phi)
    return std::numbers::sqrt2 * std::sqrt(2.0 * u * u + s2) / std::sqrt(s2);
  };

  const double phi_mid = std::acos(std::clamp(0.5 * (1.0 - energy), -1.0, 1.0));
  const double u_mid = std::sqrt(0.5 * (energy + 1.0));
  const double quarter = adaptive_simpson(integrand_phi, 0.0, phi_mid, 0.25 * quad_tol) +
                         adaptive_simpson(integrand_u, 0.0, u_mid, 0.25 * quad_tol);
  // One closed curve: factor 2 for phi -> -phi, factor 2 for the +/- I pair.
  return 4.0 * quarter;
}

}  // namespace ldc
