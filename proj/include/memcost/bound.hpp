#pragma once
// The product bound on energy x surface for a memory of S nats in d degrees
// of freedom and mass m:
//   P >= (hbar^2 / 2m) d^2 (e^{S/d} - 1)^2
// plus the kappa critical-point elimination and the inversion S_max(E, <r^2>).

#include <cmath>
#include <stdexcept>

#include "memcost/spectrum.hpp"

namespace memcost {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;            // J s (CODATA)
inline constexpr double electron_volt = 1.602176634e-19;   // J
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double ln2 = 0.6931471805599453;
}  // namespace constants

struct BoundQuery {
  double s_total;  // nats
  Dimension d;
  double mass_kg;
};

struct PhysicalBound {
  double product_bound = 0.0;  // J m^2
  double hbar_used = constants::hbar;
};

inline void validate(const BoundQuery& q) {
  if (!(q.s_total >= 0.0) || !std::isfinite(q.s_total))
    throw std::invalid_argument("BoundQuery: s_total must be finite and >= 0");
  if (!(q.mass_kg > 0.0)) throw std::invalid_argument("BoundQuery: mass must be > 0");
}

inline PhysicalBound product_bound(const BoundQuery& q) {
  validate(q);
  const double d = q.d.value();
  const double x = d * std::expm1(q.s_total / d);
  PhysicalBound out;
  out.product_bound = constants::hbar * constants::hbar / (2.0 * q.mass_kg) * x * x;
  return out;
}

// lemma_side A = hbar d (e^{S/d} - 1) / sqrt(m), in J per sqrt(kappa).
inline double lemma_side(const BoundQuery& q) {
  validate(q);
  const double d = q.d.value();
  return constants::hbar * d * std::expm1(q.s_total / d) / std::sqrt(q.mass_kg);
}

struct KappaResult {
  double kappa_star = 0.0;  // J / m^2
  double bound = 0.0;       // J m^2, equals A^2/2 independent of r^2
};

// Maximizes sqrt(k) (A - sqrt(k)/2 * r2) r2 over k: critical point k* = A^2/r2^2,
// value A^2/2. The log-grid sampling cross-checks that k* really is the maximum.
inline KappaResult kappa_optimize(double lemma_side_value, double r_squared) {
  if (!(lemma_side_value > 0.0) || !(r_squared > 0.0))
    throw std::invalid_argument("kappa_optimize: arguments must be > 0");
  KappaResult out;
  out.kappa_star = lemma_side_value * lemma_side_value / (r_squared * r_squared);
  out.bound = lemma_side_value * lemma_side_value / 2.0;
  const auto objective = [&](double k) {
    const double sk = std::sqrt(k);
    return sk * (lemma_side_value - 0.5 * sk * r_squared) * r_squared;
  };
  const double at_star = objective(out.kappa_star);
  for (double f = 1e-3; f <= 1e3 + 1e-9; f *= 1.2589254117941673) {  // 0.1 decade steps
    if (std::fabs(f - 1.0) < 1e-12) continue;
    if (objective(out.kappa_star * f) >= at_star)
      throw std::logic_error("kappa_optimize: grid point beats the critical point");
  }
  return out;
}

inline KappaResult kappa_optimize(const BoundQuery& q, double r_squared) {
  return kappa_optimize(lemma_side(q), r_squared);
}

struct MaxEntropy {
  double nats = 0.0;
  double bits = 0.0;
};

// S_max = d ln(1 + sqrt(2 m E <r^2>) / (hbar d)); E = 0 maps to 0.
inline MaxEntropy invert_bound(double energy_j, double r_squared, double mass_kg,
                               Dimension dim) {
  if (!(energy_j >= 0.0) || !(r_squared > 0.0) || !(mass_kg > 0.0))
    throw std::invalid_argument("invert_bound: invalid arguments");
  const double d = dim.value();
  MaxEntropy out;
  out.nats = d * std::log1p(std::sqrt(2.0 * mass_kg * energy_j * r_squared) /
                            (constants::hbar * d));
  out.bits = out.nats / constants::ln2;
  return out;
}

}  // namespace memcost
