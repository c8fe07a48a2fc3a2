#pragma once
// Capacity-estimate scenario: a macroscopic spherical memory described by
// flat key=value text, so every assumption stays visible and editable.

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "memcost/bound.hpp"

namespace memcost {

struct Scenario {
  double mass_kg = 1.0;
  double volume_m3 = 1e-3;
  double energy_per_atom_eV = 10.0;
  double atom_mass_amu = 1.0;
  double dof_per_atom = 1.0;
};

inline Scenario parse_scenario(std::istream& in) {
  Scenario sc;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    std::istringstream(line) >> trimmed;
    if (trimmed.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("scenario: missing '=' on line " + std::to_string(lineno));
    std::string key;
    std::istringstream(line.substr(0, eq)) >> key;
    double value;
    std::istringstream vs(line.substr(eq + 1));
    if (!(vs >> value))
      throw std::runtime_error("scenario: bad value on line " + std::to_string(lineno));
    if (key == "mass_kg")
      sc.mass_kg = value;
    else if (key == "volume_m3")
      sc.volume_m3 = value;
    else if (key == "energy_per_atom_eV")
      sc.energy_per_atom_eV = value;
    else if (key == "atom_mass_amu")
      sc.atom_mass_amu = value;
    else if (key == "dof_per_atom")
      sc.dof_per_atom = value;
    else
      throw std::runtime_error("scenario: unknown key '" + key + "'");
  }
  if (!(sc.mass_kg > 0.0) || !(sc.volume_m3 > 0.0) || !(sc.energy_per_atom_eV >= 0.0) ||
      !(sc.atom_mass_amu > 0.0) || !(sc.dof_per_atom > 0.0))
    throw std::runtime_error("scenario: values out of range");
  return sc;
}

struct CapacityEstimate {
  double atoms = 0.0;
  double dof = 0.0;
  double r_squared_m2 = 0.0;   // <r^2> of a uniform ball, (3/5) R^2
  double total_energy_j = 0.0;
  double s_max_nats = 0.0;
  double s_max_bits = 0.0;
  double bits_per_dof = 0.0;
};

inline CapacityEstimate estimate_capacity(const Scenario& sc) {
  CapacityEstimate est;
  est.atoms = sc.mass_kg / (sc.atom_mass_amu * constants::atomic_mass_unit);
  est.dof = est.atoms * sc.dof_per_atom;
  const double radius = std::cbrt(3.0 * sc.volume_m3 / (4.0 * M_PI));
  est.r_squared_m2 = 0.6 * radius * radius;
  est.total_energy_j = est.atoms * sc.energy_per_atom_eV * constants::electron_volt;
  if (est.total_energy_j > 0.0) {
    // the bound's mass is the device's total mass in this reading
    const double d = est.dof;
    est.s_max_nats =
        d * std::log1p(std::sqrt(2.0 * sc.mass_kg * est.total_energy_j * est.r_squared_m2) /
                       (constants::hbar * d));
  }
  est.s_max_bits = est.s_max_nats / constants::ln2;
  est.bits_per_dof = est.s_max_bits / est.dof;
  return est;
}

}  // namespace memcost
