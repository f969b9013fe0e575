#include "doctest.h"

#include <cmath>
#include <vector>

#include "ldc/ld.hpp"

using namespace ldc;

namespace {

LDConfig flow_cfg(double t, double step = 1e-2) {
  LDConfig cfg;
  cfg.final_time = t;
  cfg.integrator.step = step;
  return cfg;
}

LDConfig map_cfg(long long n) {
  LDConfig cfg;
  cfg.iterates = n;
  return cfg;
}

}  // namespace

TEST_CASE("integrable fgl grows linearly with time") {
  const auto m = FlowModel::fgl(0.0);
  const auto ld = ld_flow(m, {0.3, 0.1, 0.0, 0.0, 0.0, 0.0}, flow_cfg(100.0));
  CHECK(ld.status == LDStatus::Ok);
  CHECK(std::abs(ld.value - std::sqrt(1.1) * 100.0) / (std::sqrt(1.1) * 100.0) < 1e-6);
}

TEST_CASE("ld vanishes at the elliptic fixed point") {
  const auto ld = ld_flow(FlowModel::pendulum(), {0.0, 0.0}, flow_cfg(50.0));
  CHECK(ld.status == LDStatus::Ok);
  CHECK(ld.value == 0.0);
}

TEST_CASE("production step agrees with a Richardson-refined reference") {
  const auto m = FlowModel::pendulum();
  const StateVector x0{2.5, 0.0};
  const double coarse = ld_flow(m, x0, flow_cfg(100.0, 1e-2)).value;
  const double fine = ld_flow(m, x0, flow_cfg(100.0, 1e-4)).value;
  const double fine2 = ld_flow(m, x0, flow_cfg(100.0, 2e-4)).value;
  const double reference = fine + (fine - fine2) / 15.0;
  CHECK(std::abs(coarse - reference) / reference < 1e-6);
}

TEST_CASE("integrable standard map oracle n * |y0|") {
  const auto m = MapModel::standard_map(0.0);
  auto ld = ld_map(m, {0.0, 0.25}, map_cfg(150));
  CHECK(ld.status == LDStatus::Ok);
  CHECK(ld.value == 37.5);

  ld = ld_map(m, {0.7, 0.0}, map_cfg(400));
  CHECK(ld.value == 0.0);

  // Exact for binary-representable actions.
  for (const double y0 : {0.5, 0.375, 0.125}) {
    ld = ld_map(m, {0.1, y0}, map_cfg(150));
    CHECK(ld.value == 150.0 * y0);
  }
}

TEST_CASE("integrable froeschle 4d accumulates a constant displacement") {
  const auto ld = ld_map(MapModel::froeschle_4d(0.0), {1.0, 0.0, 0.5, 0.0}, map_cfg(10));
  CHECK(ld.value == doctest::Approx(10.0 * std::sqrt(1.25)).epsilon(1e-14));
}

TEST_CASE("ld is additive over consecutive windows") {
  const auto m = FlowModel::pendulum();
  const StateVector x0{1.2, 0.3};
  const double whole = ld_flow(m, x0, flow_cfg(7.0)).value;
  const double first = ld_flow(m, x0, flow_cfg(3.0)).value;
  const auto mid = propagate(m, x0, 0.0, 3.0, IntegratorConfig{1e-2});
  const double second = ld_flow(m, mid.state, flow_cfg(4.0)).value;
  CHECK(whole == doctest::Approx(first + second).epsilon(1e-9));
}

TEST_CASE("ld is nonnegative and nondecreasing in the window") {
  const auto m = FlowModel::chirikov_overlap(0.5, 0.01);
  const StateVector x0{0.5, 0.0, 0.7, 0.0};
  double prev = 0.0;
  for (double t : {5.0, 10.0, 20.0, 40.0}) {
    const auto ld = ld_flow(m, x0, flow_cfg(t));
    CHECK(ld.value >= prev);
    prev = ld.value;
  }
}

TEST_CASE("p = 1 norm dominates the arc length") {
  const auto m = FlowModel::henon_heiles();
  const StateVector x0{0.0, 0.1, 0.3, 0.05};
  auto cfg = flow_cfg(20.0);
  const double arc = ld_flow(m, x0, cfg).value;
  cfg.observable = Observable::PNorm;
  cfg.p = 1.0;
  const double l1 = ld_flow(m, x0, cfg).value;
  CHECK(l1 >= arc);

  const auto map = MapModel::standard_map(0.9);
  auto mcfg = map_cfg(200);
  const double marc = ld_map(map, {0.12, 0.34}, mcfg).value;
  mcfg.observable = Observable::PNorm;
  mcfg.p = 1.0;
  CHECK(ld_map(map, {0.12, 0.34}, mcfg).value >= marc);
}

TEST_CASE("both directions sum the forward and backward contributions") {
  const auto m = FlowModel::pendulum();
  const StateVector x0{1.7, 0.4};
  auto cfg = flow_cfg(12.0);
  const double fwd = ld_flow(m, x0, cfg).value;
  cfg.direction = Direction::Backward;
  const double bwd = ld_flow(m, x0, cfg).value;
  CHECK(bwd > 0.0);
  cfg.direction = Direction::Both;
  CHECK(ld_flow(m, x0, cfg).value == doctest::Approx(fwd + bwd).epsilon(1e-12));
}

TEST_CASE("action observable matches an independent quadrature") {
  // Store twice the kinetic energy along the trajectory and integrate it
  // with composite Simpson; both routes are fourth order.
  const auto m = FlowModel::henon_heiles();
  const auto px = hh_lift(0.1, 0.0, 0.105);
  REQUIRE(px.has_value());
  const StateVector x0{0.0, 0.1, *px, 0.0};

  const double T = 10.0, h = 1e-3;
  std::vector<double> samples{x0[2] * x0[2] + x0[3] * x0[3]};
  propagate(m, x0, 0.0, T, IntegratorConfig{h},
            [&](double, const StateVector& x, const StateVector&) {
              samples.push_back(x[2] * x[2] + x[3] * x[3]);
            });
  REQUIRE(samples.size() % 2 == 1);  // even interval count
  double simpson = 0.0;
  for (std::size_t i = 0; i + 2 < samples.size(); i += 2)
    simpson += h / 3.0 * (samples[i] + 4.0 * samples[i + 1] + samples[i + 2]);

  auto cfg = flow_cfg(T, h);
  cfg.observable = Observable::Action2T;
  const auto ld = ld_flow(m, x0, cfg);
  CHECK(std::abs(ld.value - simpson) < 1e-9);
}

TEST_CASE("diverging trajectories report escaped with partial value") {
  const auto ld = ld_flow(FlowModel::henon_heiles(), {0.0, 3.0, 0.0, 5.0}, flow_cfg(50.0));
  CHECK(ld.status == LDStatus::Escaped);
  CHECK(std::isfinite(ld.value));
  CHECK(ld.value >= 0.0);
}

TEST_CASE("config contracts") {
  auto cfg = flow_cfg(10.0);
  cfg.observable = Observable::PNorm;
  cfg.p = 0.0;
  CHECK_THROWS_AS(ld_flow(FlowModel::pendulum(), {1.0, 0.0}, cfg), std::invalid_argument);
  cfg.p = 1.5;
  CHECK_THROWS_AS(ld_flow(FlowModel::pendulum(), {1.0, 0.0}, cfg), std::invalid_argument);

  cfg = flow_cfg(10.0);
  cfg.observable = Observable::Action2T;
  CHECK_THROWS_AS(ld_flow(FlowModel::pendulum(), {1.0, 0.0}, cfg), std::invalid_argument);

  auto mcfg = map_cfg(0);
  CHECK_THROWS_AS(ld_map(MapModel::standard_map(0.5), {0.1, 0.1}, mcfg), std::invalid_argument);
}

// --- geometrical LD ---------------------------------------------------------

TEST_CASE("level curve length shrinks to zero at the elliptic point") {
  const double e = -1.0 + 2e-6;
  const double radius = std::sqrt(2.0 * (e + 1.0));
  const double len = geometric_ld_pendulum(e);
  CHECK(std::abs(len / (2.0 * std::numbers::pi * radius) - 1.0) < 1e-3);
  CHECK(len < 2e-2);
}

TEST_CASE("level curve length agrees with the trajectory arc length over one period") {
  // Independent route: the E = 0 libration orbit traced for exactly one
  // period has arc length equal to the closed level curve's length. The
  // period is 4 K(1/sqrt(2)).
  const double period = 4.0 * 1.8540746773013723;
  const auto ld = ld_flow(FlowModel::pendulum(), {std::sqrt(2.0), 0.0}, flow_cfg(period, 1e-4));
  const double len = geometric_ld_pendulum(0.0, 1e-10);
  CHECK(std::abs(ld.value - len) / len < 1e-6);
}

TEST_CASE("derivative of the level curve length diverges as a square root") {
  // |dl/dE| ~ C / sqrt(E - E_sx) approaching the separatrix from above.
  const int points = 12;
  const double lo = 1e-4, hi = 1e-2;
  std::vector<double> s(points), len(points);
  for (int i = 0; i < points; ++i) {
    s[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    len[i] = geometric_ld_pendulum(1.0 + s[i], 1e-10);
  }
  std::vector<double> xs, ys;
  for (int i = 1; i + 1 < points; ++i) {
    const double deriv = (len[i + 1] - len[i - 1]) / (s[i + 1] - s[i - 1]);
    xs.push_back(std::log10(s[i]));
    ys.push_back(std::log10(std::abs(deriv)));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
  }
  const double slope = (xs.size() * sxy - sx * sy) / (xs.size() * sxx - sx * sx);
  CHECK(slope == doctest::Approx(-0.5).epsilon(0.1));
}

TEST_CASE("geometrical ld domain") {
  CHECK_THROWS_AS(geometric_ld_pendulum(-1.0), std::domain_error);
  CHECK_THROWS_AS(geometric_ld_pendulum(-2.0), std::domain_error);
  CHECK_THROWS_AS(geometric_ld_pendulum(1.0), std::domain_error);
}
