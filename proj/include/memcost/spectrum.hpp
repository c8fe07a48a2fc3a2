#pragma once
// Exact eigenlevels of the dimensionless Hamiltonian
//   H = 1/2 sum_i (-d^2/dq_i^2) - W/q^2 + q^2,  W = (1-d/2)^2,
// at the critical inverse-square coupling:
//   E(n,l) = 2n + sqrt(l(l+d-2)),   g(l) = (d+2l-2)(d+l-3)! / (l!(d-2)!)

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace memcost {

class Dimension {
 public:
  explicit Dimension(int d) : d_(d) {
    if (d < 3) throw std::invalid_argument("Dimension: d must be >= 3");
  }
  int value() const { return d_; }

 private:
  int d_;
};

struct QuantumNumbers {
  long n = 0;
  long l = 0;
};

struct EnergyLevel {
  QuantumNumbers qn;
  double energy = 0.0;
  double log_degeneracy = 0.0;
};

inline double energy(QuantumNumbers qn, Dimension dim) {
  if (qn.n < 0 || qn.l < 0)
    throw std::invalid_argument("energy: quantum numbers must be >= 0");
  const double d = dim.value();
  const double l = static_cast<double>(qn.l);
  return 2.0 * static_cast<double>(qn.n) + std::sqrt(l * (l + d - 2.0));
}

// ln g(l), via log-gamma so large d, l stay finite.
inline double log_degeneracy(long l, Dimension dim) {
  if (l < 0) throw std::invalid_argument("log_degeneracy: l must be >= 0");
  const double d = dim.value();
  const double ld = static_cast<double>(l);
  return std::log(d + 2.0 * ld - 2.0) + std::lgamma(d + ld - 2.0) -
         std::lgamma(ld + 1.0) - std::lgamma(d - 1.0);
}

// All (n,l) with E(n,l) <= energy_cap, ascending by energy, ties by (n,l).
inline std::vector<EnergyLevel> enumerate_levels(Dimension dim, double energy_cap,
                                                 std::size_t max_levels = 2000000) {
  if (!(energy_cap > 0.0))
    throw std::invalid_argument("enumerate_levels: energy_cap must be > 0");
  std::vector<EnergyLevel> out;
  for (long n = 0; 2.0 * static_cast<double>(n) <= energy_cap; ++n) {
    for (long l = 0;; ++l) {
      const QuantumNumbers qn{n, l};
      const double e = energy(qn, dim);
      if (e > energy_cap) break;
      if (out.size() >= max_levels)
        throw std::length_error("enumerate_levels: level count exceeds max_levels");
      out.push_back({qn, e, log_degeneracy(l, dim)});
    }
  }
  std::sort(out.begin(), out.end(), [](const EnergyLevel& a, const EnergyLevel& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.qn.n != b.qn.n) return a.qn.n < b.qn.n;
    return a.qn.l < b.qn.l;
  });
  return out;
}

}  // namespace memcost
