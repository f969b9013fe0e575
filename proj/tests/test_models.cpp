#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "ldc/models.hpp"

using namespace ldc;

namespace {

// Canonical pairs (momentum index, coordinate index) per model, for checking
// the right-hand sides against finite differences of the Hamiltonian.
std::vector<std::pair<int, int>> canonical_pairs(const FlowModel& m) {
  switch (m.kind) {
    case FlowKind::Pendulum: return {{0, 1}};
    case FlowKind::ModulatedPendulum: return {{0, 2}, {1, 3}};
    case FlowKind::ChirikovOverlap: return {{0, 2}, {1, 3}};
    case FlowKind::Fgl: return {{0, 3}, {1, 4}, {2, 5}};
    case FlowKind::HenonHeiles: return {{2, 0}, {3, 1}};
  }
  return {};
}

double partial_h(const FlowModel& m, StateVector x, int coord) {
  const double h = 1e-6;
  StateVector xp = x, xm = x;
  xp[coord] += h;
  xm[coord] -= h;
  return (hamiltonian(m, xp) - hamiltonian(m, xm)) / (2.0 * h);
}

StateVector random_state(const FlowModel& m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  StateVector x(m.dim());
  for (int i = 0; i < m.dim(); ++i) x[i] = dist(rng);
  return x;
}

}  // namespace

TEST_CASE("pendulum rhs at the saddle and on the phi = 0 line") {
  const auto m = FlowModel::pendulum();
  const auto saddle = flow_rhs(m, {0.0, std::numbers::pi}, 0.0);
  CHECK(saddle[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(saddle[1] == 0.0);
  const auto circ = flow_rhs(m, {2.0, 0.0}, 0.0);
  CHECK(circ[0] == 0.0);
  CHECK(circ[1] == 2.0);
}

TEST_CASE("fgl with eps = 0 is trivially integrable") {
  const auto m = FlowModel::fgl(0.0);
  const auto dx = flow_rhs(m, {0.3, 0.1, 0.0, 0.4, 1.1, 2.2}, 0.0);
  CHECK(dx[0] == 0.0);
  CHECK(dx[1] == 0.0);
  CHECK(dx[2] == 0.0);
  CHECK(dx[3] == 0.3);
  CHECK(dx[4] == 0.1);
  CHECK(dx[5] == 1.0);
}

TEST_CASE("henon-heiles rhs at the origin") {
  const auto dx = flow_rhs(FlowModel::henon_heiles(), {0.0, 0.0, 0.1, 0.0}, 0.0);
  CHECK(dx[0] == 0.1);
  CHECK(dx[1] == 0.0);
  CHECK(dx[2] == 0.0);
  CHECK(dx[3] == 0.0);
}

TEST_CASE("rhs agrees with finite differences of the Hamiltonian") {
  std::mt19937_64 rng(42);
  const FlowModel models[] = {
      FlowModel::pendulum(), FlowModel::modulated_pendulum(0.1),
      FlowModel::chirikov_overlap(0.5, 0.01), FlowModel::fgl(0.02),
      FlowModel::henon_heiles()};
  for (const auto& m : models) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_state(m, rng);
      const auto dx = flow_rhs(m, x, 0.0);
      for (const auto& [p, q] : canonical_pairs(m)) {
        CHECK(dx[q] == doctest::Approx(partial_h(m, x, p)).epsilon(1e-5));
        CHECK(dx[p] == doctest::Approx(-partial_h(m, x, q)).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("extended models carry a unit clock rate") {
  std::mt19937_64 rng(7);
  for (const auto& m :
       {FlowModel::modulated_pendulum(0.3), FlowModel::chirikov_overlap(0.5, 0.01)}) {
    const auto dx = flow_rhs(m, random_state(m, rng), 0.0);
    CHECK(dx[3] == 1.0);
  }
}

TEST_CASE("pendulum symmetry H(I, phi) = H(-I, phi)") {
  const auto m = FlowModel::pendulum();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-2.5, 2.5);
  for (int trial = 0; trial < 50; ++trial) {
    const double I = dist(rng), phi = dist(rng);
    const auto plus = flow_rhs(m, {I, phi}, 0.0);
    const auto minus = flow_rhs(m, {-I, phi}, 0.0);
    CHECK(minus[0] == plus[0]);
    CHECK(minus[1] == -plus[1]);
  }
}

TEST_CASE("standard map integrable step and wrap") {
  const auto m = MapModel::standard_map(0.0);
  auto r = map_step(m, {0.2, 0.25});
  CHECK(r.next[0] == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(r.next[1] == 0.25);
  CHECK(r.displacement[0] == 0.25);
  CHECK(r.displacement[1] == 0.0);

  r = map_step(m, {0.9, 0.25});
  CHECK(r.next[0] == doctest::Approx(0.15).epsilon(1e-13));
  CHECK(r.displacement[0] == 0.25);
}

TEST_CASE("froeschle 4d integrable step") {
  const auto m = MapModel::froeschle_4d(0.0);
  const auto r = map_step(m, {1.0, 0.0, 0.5, 0.0});
  CHECK(r.next[0] == 1.0);
  CHECK(r.next[1] == 1.0);
  CHECK(r.next[2] == 0.5);
  CHECK(r.next[3] == 0.5);
  CHECK(r.displacement[0] == 0.0);
  CHECK(r.displacement[1] == 1.0);
  CHECK(r.displacement[2] == 0.0);
  CHECK(r.displacement[3] == 0.5);
}

TEST_CASE("map displacement is invariant under shifting a wrapped angle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const MapModel models[] = {MapModel::standard_map(0.7), MapModel::froeschle_4d(0.6),
                             MapModel::generalized_froeschle(0.1, 0.1, 0.07, 0.1)};
  for (const auto& m : models) {
    const auto periods = m.wrap();
    for (int trial = 0; trial < 40; ++trial) {
      StateVector z(m.dim());
      for (int i = 0; i < m.dim(); ++i) z[i] = dist(rng);
      const auto base = map_step(m, z);
      for (int i = 0; i < m.dim(); ++i) {
        if (periods[i] == 0.0) continue;
        StateVector shifted = z;
        shifted[i] += periods[i];
        const auto moved = map_step(m, shifted);
        for (int cmp = 0; cmp < m.dim(); ++cmp)
          CHECK(moved.displacement[cmp] ==
                doctest::Approx(base.displacement[cmp]).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("standard map jacobian determinant is 1") {
  const auto m = MapModel::standard_map(0.8);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const double x = dist(rng), y = dist(rng);
    // Unwrapped one-step images for clean finite differences.
    auto image = [&](double xx, double yy) {
      const auto r = map_step(m, {xx, yy});
      return std::array<double, 2>{xx + r.displacement[0], yy + r.displacement[1]};
    };
    const auto xp = image(x + h, y), xm = image(x - h, y);
    const auto yp = image(x, y + h), ym = image(x, y - h);
    const double j11 = (xp[0] - xm[0]) / (2 * h);
    const double j12 = (yp[0] - ym[0]) / (2 * h);
    const double j21 = (xp[1] - xm[1]) / (2 * h);
    const double j22 = (yp[1] - ym[1]) / (2 * h);
    CHECK(std::abs(j11 * j22 - j12 * j21 - 1.0) < 1e-6);
  }
}

TEST_CASE("hh_lift closed forms and admissibility boundary") {
  auto px = hh_lift(0.0, 0.0, 0.105);
  REQUIRE(px.has_value());
  CHECK(*px == doctest::Approx(std::sqrt(0.21)).epsilon(1e-15));

  // Radicand lands exactly on zero: strict positivity excludes it.
  CHECK_FALSE(hh_lift(0.0, std::sqrt(0.21), 0.105).has_value());
  CHECK_FALSE(hh_lift(0.0, 0.5, 0.125).has_value());
  CHECK_FALSE(hh_lift(0.0, 1.0, 0.105).has_value());

  // Substituting the lifted momentum back must recover the energy.
  px = hh_lift(0.2, 0.1, 0.118);
  REQUIRE(px.has_value());
  const double H = hamiltonian(FlowModel::henon_heiles(), {0.0, 0.2, *px, 0.1});
  CHECK(std::abs(H - 0.118) <= 1e-12);
}

TEST_CASE("fgl resonance line enumeration") {
  const auto order1 = fgl_resonance_lines(1);
  REQUIRE(order1.size() == 3);
  const std::set<std::array<int, 3>> expected = {{{0, 0, 1}}, {{0, 1, 0}}, {{1, 0, 0}}};
  CHECK(std::set<std::array<int, 3>>(order1.begin(), order1.end()) == expected);

  const auto order2 = fgl_resonance_lines(2);
  CHECK(order2.size() == 9);
  const std::set<std::array<int, 3>> set2(order2.begin(), order2.end());
  CHECK(set2.count({1, -1, 0}) == 1);
  CHECK(set2.count({1, 1, -1}) == 0);  // order 3
  for (const auto& k : order2) {
    CHECK(std::gcd(std::gcd(std::abs(k[0]), std::abs(k[1])), std::abs(k[2])) == 1);
    const int first = k[0] != 0 ? k[0] : (k[1] != 0 ? k[1] : k[2]);
    CHECK(first > 0);
  }
}

TEST_CASE("pendulum level curve") {
  auto I = pendulum_level_curve(1.0, 0.0);
  REQUIRE(I.has_value());
  CHECK(*I == 2.0);

  I = pendulum_level_curve(-1.0, 0.0);
  REQUIRE(I.has_value());
  CHECK(*I == 0.0);

  I = pendulum_level_curve(0.0, std::numbers::pi / 2.0);
  REQUIRE(I.has_value());
  CHECK(std::abs(*I) < 1e-7);

  CHECK_FALSE(pendulum_level_curve(0.0, std::numbers::pi).has_value());
}

TEST_CASE("model construction contracts") {
  CHECK_THROWS_AS(MapModel::standard_map(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(MapModel::standard_map(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(FlowModel::fgl(std::numeric_limits<double>::infinity()), std::invalid_argument);
  CHECK_THROWS_AS(flow_rhs(FlowModel::pendulum(), {1.0, 2.0, 3.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(map_step(MapModel::standard_map(0.5), {1.0}), std::invalid_argument);

  FlowModel fgl = FlowModel::fgl(0.01);
  set_param(fgl, "eps", 0.04);
  CHECK(fgl.eps == 0.04);
  CHECK_THROWS_AS(set_param(fgl, "mu", 0.1), std::invalid_argument);
}
