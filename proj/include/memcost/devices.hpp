#pragma once
// Order-of-magnitude storage-cost models for three textbook devices:
// particle in a box (E ~ n^2), harmonic oscillator (E ~ n) and hydrogen-like
// levels (E ~ 1 - 1/n^2). The entropy-matched minimum-energy distribution
// over the device levels supplies the moments entering the cost expressions.
//
// Hydrogen energies are stored shifted so the ground state costs zero, i.e.
// the energy column reads <1 - 1/n^2> rather than the literal <1/n^2>.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "memcost/bound.hpp"
#include "memcost/lemma.hpp"

namespace memcost {

enum class DeviceKind { box, oscillator, hydrogen };

struct DeviceSpec {
  DeviceKind kind = DeviceKind::box;
  double mass_kg = 0.0;
  // box: width L [m]; oscillator: omega [1/s]; hydrogen: Coulomb coupling
  // e^2 = q^2/(4 pi eps0) [J m]
  double scale = 0.0;
  int level_cap = 256;
};

struct Moments {
  double n = 0.0, n2 = 0.0, n4 = 0.0, inv_n2 = 0.0;
};

struct DeviceCost {
  double mean_energy = 0.0;   // J
  double mean_surface = 0.0;  // m^2
  double product = 0.0;       // J m^2
  Moments moments;
};

inline void validate(const DeviceSpec& spec) {
  if (!(spec.mass_kg > 0.0)) throw std::invalid_argument("DeviceSpec: mass must be > 0");
  if (!(spec.scale > 0.0)) throw std::invalid_argument("DeviceSpec: scale must be > 0");
  if (spec.level_cap < 2) throw std::invalid_argument("DeviceSpec: level_cap must be >= 2");
}

namespace detail {

// Dimensionless level list with ground energy 0; n starts at 1 for the box
// and hydrogen, at 0 for the oscillator.
inline std::pair<FiniteSpectrum, std::vector<double>> device_spectrum(const DeviceSpec& s) {
  std::vector<Level> levels;
  std::vector<double> qn;
  for (int k = 0; k < s.level_cap; ++k) {
    double n, e;
    switch (s.kind) {
      case DeviceKind::box:
        n = k + 1.0;
        e = n * n - 1.0;
        break;
      case DeviceKind::oscillator:
        n = static_cast<double>(k);
        e = n;
        break;
      case DeviceKind::hydrogen:
        n = k + 1.0;
        e = 1.0 - 1.0 / (n * n);
        break;
      default:
        throw std::invalid_argument("device_spectrum: unknown kind");
    }
    levels.push_back({e, 1.0});
    qn.push_back(n);
  }
  return {FiniteSpectrum(std::move(levels)), std::move(qn)};
}

}  // namespace detail

inline DeviceCost device_cost(const DeviceSpec& spec, double s_target) {
  validate(spec);
  if (!(s_target > 0.0) || s_target > std::log(static_cast<double>(spec.level_cap)) + 1e-12)
    throw std::invalid_argument("device_cost: entropy outside (0, ln(level_cap)]");
  const auto [spectrum, qn] = detail::device_spectrum(spec);
  const MinEnergyResult res = min_energy_at_entropy(spectrum, s_target);
  const auto& p = res.dist.probabilities();

  Moments m;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double n = qn[i];
    m.n += p[i] * n;
    m.n2 += p[i] * n * n;
    m.n4 += p[i] * n * n * n * n;
    m.inv_n2 += p[i] / (n * n);
  }

  const double hbar = constants::hbar;
  const double mass = spec.mass_kg;
  DeviceCost out;
  out.moments = m;
  switch (spec.kind) {
    case DeviceKind::box: {
      const double L = spec.scale;
      out.mean_energy = hbar * hbar * M_PI * M_PI / (mass * L * L) * m.n2;
      out.mean_surface = L * L;
      break;
    }
    case DeviceKind::oscillator: {
      const double omega = spec.scale;
      out.mean_energy = hbar * omega * m.n;
      out.mean_surface = hbar / (mass * omega) * m.n;
      break;
    }
    case DeviceKind::hydrogen: {
      const double e2 = spec.scale;
      out.mean_energy = e2 * e2 * mass / (hbar * hbar) * (1.0 - m.inv_n2);
      out.mean_surface = hbar * hbar * hbar * hbar / (mass * mass * e2 * e2) * m.n4;
      break;
    }
  }
  out.product = out.mean_energy * out.mean_surface;
  return out;
}

inline std::vector<DeviceCost> growth_scan(const DeviceSpec& spec,
                                           const std::vector<double>& s_values) {
  double prev = -1.0;
  for (double s : s_values) {
    if (s <= prev) throw std::invalid_argument("growth_scan: s_values must be ascending");
    prev = s;
  }
  std::vector<DeviceCost> out;
  out.reserve(s_values.size());
  for (double s : s_values) out.push_back(device_cost(spec, s));
  return out;
}

}  // namespace memcost
