#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "memcost/devices.hpp"

using namespace memcost;

namespace {

constexpr double kElectronMass = 9.1093837015e-31;
constexpr double kCoulomb = 2.3070775523417355e-28;  // e^2/(4 pi eps0), J m

DeviceSpec box(double L = 1e-9, int cap = 256) {
  return {DeviceKind::box, kElectronMass, L, cap};
}
DeviceSpec osc(double omega = 1e15, int cap = 256) {
  return {DeviceKind::oscillator, kElectronMass, omega, cap};
}
DeviceSpec hyd(int cap = 256) {
  return {DeviceKind::hydrogen, kElectronMass, kCoulomb, cap};
}

}  // namespace

TEST_CASE("box near zero entropy sits at the ground level") {
  const auto c = device_cost(box(), 1e-6);
  CHECK(c.moments.n2 == Catch::Approx(1.0).epsilon(1e-3));
  const double unit = constants::hbar * constants::hbar / kElectronMass;
  CHECK(c.product / unit == Catch::Approx(M_PI * M_PI).epsilon(1e-2));
}

TEST_CASE("box moments at maximum entropy over 4 levels are uniform") {
  // independent expectation: ln 4 forces the uniform distribution over n=1..4
  const auto c = device_cost(box(1e-9, 4), std::log(4.0));
  CHECK(c.moments.n == Catch::Approx(2.5).epsilon(1e-9));
  CHECK(c.moments.n2 == Catch::Approx(7.5).epsilon(1e-9));
  CHECK(c.moments.n4 == Catch::Approx(88.5).epsilon(1e-9));
  CHECK(c.moments.inv_n2 ==
        Catch::Approx((1.0 + 0.25 + 1.0 / 9 + 1.0 / 16) / 4.0).epsilon(1e-9));
  const double expected_energy = constants::hbar * constants::hbar * M_PI * M_PI /
                                 (kElectronMass * 1e-18) * 7.5;
  CHECK(c.mean_energy == Catch::Approx(expected_energy).epsilon(1e-9));
}

TEST_CASE("oscillator product equals (hbar^2/m) <n>^2") {
  const auto c = device_cost(osc(), 1.5);
  const double unit = constants::hbar * constants::hbar / kElectronMass;
  CHECK(c.product == Catch::Approx(unit * c.moments.n * c.moments.n).epsilon(1e-12));
}

TEST_CASE("oscillator product invariant under omega") {
  const auto a = device_cost(osc(1e12), 1.5);
  const auto b = device_cost(osc(1e18), 1.5);
  CHECK(a.product == Catch::Approx(b.product).epsilon(1e-12));
}

TEST_CASE("box product invariant under L") {
  const auto a = device_cost(box(1e-10), 1.5);
  const auto b = device_cost(box(1e-6), 1.5);
  CHECK(a.product == Catch::Approx(b.product).epsilon(1e-12));
}

TEST_CASE("hydrogen ground state costs zero") {
  const auto c = device_cost(hyd(), 1e-9);
  CHECK(c.mean_energy == Catch::Approx(0.0).margin(1e-25));
}

TEST_CASE("growth: products strictly increase with entropy for all devices") {
  const std::vector<double> s = {0.5, 1.0, 1.5, 2.0};
  for (const DeviceSpec& spec : {box(), osc(), hyd(64)}) {
    const auto table = growth_scan(spec, s);
    for (std::size_t i = 1; i < table.size(); ++i)
      CHECK(table[i].product > table[i - 1].product);
  }
}

TEST_CASE("each product dominates the matching main bound within 10x") {
  const std::vector<double> s = {0.5, 1.0, 1.5, 2.0};
  // box and oscillator are 1-dof devices; the Dimension type starts at 3, so
  // evaluate the bound expression directly at the device's d
  const auto bound_at = [](double S, double d, double m) {
    const double x = d * std::expm1(S / d);
    return constants::hbar * constants::hbar / (2.0 * m) * x * x;
  };
  const auto check = [&](const DeviceSpec& spec, double d) {
    const auto table = growth_scan(spec, s);
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(table[i].product >= bound_at(s[i], d, spec.mass_kg) / 10.0);
  };
  check(box(), 1.0);
  check(osc(), 1.0);
  check(hyd(64), 3.0);
  // d = 3 sanity: the direct expression agrees with product_bound
  CHECK(bound_at(1.5, 3.0, kElectronMass) ==
        Catch::Approx(product_bound({1.5, Dimension(3), kElectronMass}).product_bound)
            .epsilon(1e-15));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(device_cost(box(1e-9, 4), std::log(4.0) + 0.01), std::invalid_argument);
  CHECK_THROWS_AS(device_cost(box(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(device_cost({DeviceKind::box, 0.0, 1e-9, 8}, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(growth_scan(box(), {1.0, 0.5}), std::invalid_argument);
}
