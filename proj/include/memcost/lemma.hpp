#pragma once
// Brute-force checks of the central optimization claim on explicit spectra:
// at fixed Shannon entropy, mean energy is minimized by the Boltzmann
// distribution over the sorted spectrum.
//
// Levels carry (energy, degeneracy) and the core routines work per level in
// log-space, so astronomically degenerate spectra are fine. Operations that
// need explicit per-state expansion enforce a 1e4-state resource limit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "memcost/spectrum.hpp"

namespace memcost {

struct Level {
  double energy = 0.0;
  double degeneracy = 1.0;  // state count; double so huge g(l) stay representable
};

class FiniteSpectrum {
 public:
  explicit FiniteSpectrum(std::vector<Level> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 1) throw std::invalid_argument("FiniteSpectrum: empty");
    if (levels_.front().energy != 0.0)
      throw std::invalid_argument("FiniteSpectrum: ground level must have energy 0");
    total_states_ = 0.0;
    double prev = -1.0;
    for (const Level& lv : levels_) {
      if (!(lv.energy >= 0.0) || !std::isfinite(lv.energy))
        throw std::invalid_argument("FiniteSpectrum: energies must be finite and >= 0");
      if (lv.energy <= prev)
        throw std::invalid_argument("FiniteSpectrum: energies must be strictly ascending");
      if (!(lv.degeneracy >= 1.0))
        throw std::invalid_argument("FiniteSpectrum: degeneracy must be >= 1");
      prev = lv.energy;
      total_states_ += lv.degeneracy;
    }
    if (total_states_ < 2.0)
      throw std::invalid_argument("FiniteSpectrum: needs at least 2 states");
  }

  const std::vector<Level>& levels() const { return levels_; }
  std::size_t level_count() const { return levels_.size(); }
  double total_states() const { return total_states_; }
  double max_entropy() const { return std::log(total_states_); }

  // Truncated optimal-Hamiltonian spectrum: (n,l) levels merged by energy.
  static FiniteSpectrum from_hopt(Dimension d, double energy_cap,
                                  std::size_t max_levels = 2000000) {
    const auto raw = enumerate_levels(d, energy_cap, max_levels);
    std::vector<Level> merged;
    for (const EnergyLevel& el : raw) {
      const double g = std::exp(el.log_degeneracy);
      if (!merged.empty() && merged.back().energy == el.energy)
        merged.back().degeneracy += g;
      else
        merged.push_back({el.energy, g});
    }
    // exp(ln g) lands within ulps of the integer; snap while it is exactly representable
    for (Level& lv : merged)
      if (lv.degeneracy < 9.007e15) lv.degeneracy = std::round(lv.degeneracy);
    return FiniteSpectrum(std::move(merged));
  }

  std::vector<double> expanded_energies(std::size_t max_states = 10000) const {
    if (total_states_ > static_cast<double>(max_states))
      throw std::length_error("FiniteSpectrum: too many states to expand");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(total_states_));
    for (const Level& lv : levels_)
      for (double k = 0; k < lv.degeneracy; k += 1.0) out.push_back(lv.energy);
    return out;
  }

 private:
  std::vector<Level> levels_;
  double total_states_ = 0.0;
};

// Probability distribution over cells; a cell is either a single state or a
// whole degenerate level with the per-state probability shared evenly.
class Distribution {
 public:
  Distribution(std::vector<double> cell_prob, std::vector<double> cell_count,
               std::vector<double> cell_energy)
      : p_(std::move(cell_prob)), g_(std::move(cell_count)), e_(std::move(cell_energy)) {
    if (p_.size() != g_.size() || p_.size() != e_.size())
      throw std::invalid_argument("Distribution: size mismatch");
    double sum = 0.0;
    for (double x : p_) {
      if (!(x >= 0.0)) throw std::invalid_argument("Distribution: negative probability");
      sum += x;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("Distribution: probabilities must sum to 1");
    for (double& x : p_) x /= sum;
  }

  double entropy() const {  // -sum over states q ln q, q = p/g within a cell
    double s = 0.0;
    for (std::size_t i = 0; i < p_.size(); ++i)
      if (p_[i] > 0.0) s -= p_[i] * (std::log(p_[i]) - std::log(g_[i]));
    return s;
  }

  double mean_energy() const {
    double u = 0.0;
    for (std::size_t i = 0; i < p_.size(); ++i) u += p_[i] * e_[i];
    return u;
  }

  const std::vector<double>& probabilities() const { return p_; }
  const std::vector<double>& counts() const { return g_; }
  const std::vector<double>& energies() const { return e_; }

 private:
  std::vector<double> p_, g_, e_;
};

// p_level ~ g e^{-beta E}, normalized in log-space. beta = 0 gives uniform.
inline Distribution boltzmann(const FiniteSpectrum& spec, double beta) {
  if (!(beta >= 0.0)) throw std::invalid_argument("boltzmann: beta must be >= 0");
  const auto& lv = spec.levels();
  std::vector<double> t(lv.size()), g(lv.size()), e(lv.size());
  double mx = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lv.size(); ++i) {
    t[i] = std::log(lv[i].degeneracy) - beta * lv[i].energy;
    g[i] = lv[i].degeneracy;
    e[i] = lv[i].energy;
    mx = std::max(mx, t[i]);
  }
  double z = 0.0;
  for (double& x : t) {
    x = std::exp(x - mx);
    z += x;
  }
  for (double& x : t) x /= z;
  return Distribution(std::move(t), std::move(g), std::move(e));
}

struct MinEnergyResult {
  Distribution dist;
  double beta = 0.0;  // +inf for the zero-entropy endpoint
  double mean_energy = 0.0;
};

// Bisects beta so the Boltzmann entropy hits s_target (entropy is strictly
// decreasing in beta); endpoints handled explicitly.
inline MinEnergyResult min_energy_at_entropy(const FiniteSpectrum& spec, double s_target,
                                             double entropy_tol = 1e-10) {
  const double s_max = spec.max_entropy();
  if (!(s_target >= 0.0) || s_target > s_max + 1e-9)
    throw std::invalid_argument("min_energy_at_entropy: s_target outside [0, ln N]");
  const double g0 = spec.levels().front().degeneracy;
  const double s_floor = std::log(g0);
  if (g0 > 1.0 && s_target < s_floor - 1e-9)
    throw std::invalid_argument(
        "min_energy_at_entropy: s_target below ground-level degeneracy floor");
  if (s_target >= s_max - 1e-12) {
    Distribution uni = boltzmann(spec, 0.0);
    return {uni, 0.0, uni.mean_energy()};
  }
  if (s_target <= s_floor + 1e-12) {
    std::vector<double> p(spec.level_count(), 0.0), g, e;
    p[0] = 1.0;
    for (const Level& lv : spec.levels()) {
      g.push_back(lv.degeneracy);
      e.push_back(lv.energy);
    }
    Distribution d(std::move(p), std::move(g), std::move(e));
    return {d, std::numeric_limits<double>::infinity(), 0.0};
  }
  double lo = 0.0, hi = 1.0;
  while (boltzmann(spec, hi).entropy() > s_target) {
    hi *= 2.0;
    if (hi > 1e12) throw std::runtime_error("min_energy_at_entropy: beta bracket exhausted");
  }
  double mid = hi;
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    const double s = boltzmann(spec, mid).entropy();
    if (std::fabs(s - s_target) <= entropy_tol) break;
    if (s > s_target)
      lo = mid;
    else
      hi = mid;
  }
  Distribution d = boltzmann(spec, mid);
  return {d, mid, d.mean_energy()};
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline double mixed_entropy(const std::vector<double>& p, const std::vector<double>& q,
                            const std::vector<double>& log_g, double t) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double x = (1.0 - t) * p[i] + t * q[i];
    if (x > 0.0) s -= x * (std::log(x) - log_g[i]);
  }
  return s;
}

}  // namespace detail

// Random entropy-matched challengers against the Boltzmann minimum. Returns
// min over trials of (candidate mean energy - Boltzmann mean energy); a value
// below -1e-9 would refute the minimality claim. Deterministic per seed via
// per-trial derived engines.
inline double challenge(const FiniteSpectrum& spec, double s_target, std::size_t trials,
                        std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("challenge: trials must be >= 1");
  const MinEnergyResult ref = min_energy_at_entropy(spec, s_target);
  const double u_ref = ref.mean_energy;

  // cells: explicit states when small enough, otherwise level-symmetric
  std::vector<double> g, e;
  if (spec.total_states() <= 1e4) {
    for (double en : spec.expanded_energies()) {
      g.push_back(1.0);
      e.push_back(en);
    }
  } else {
    if (spec.levels().front().degeneracy != 1.0)
      throw std::invalid_argument("challenge: degenerate ground level unsupported");
    for (const Level& lv : spec.levels()) {
      g.push_back(lv.degeneracy);
      e.push_back(lv.energy);
    }
  }
  const std::size_t n = g.size();
  std::vector<double> uniform(n), ground(n, 0.0), log_g(n);
  for (std::size_t i = 0; i < n; ++i) {
    uniform[i] = g[i] / spec.total_states();
    log_g[i] = std::log(g[i]);
  }
  ground[0] = 1.0;

  double worst = std::numeric_limits<double>::infinity();
  std::vector<double> p(n);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(detail::splitmix64(seed ^ (0xabcdULL + trial * 0x100000001b3ULL)));
    std::exponential_distribution<double> exp1(1.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = exp1(rng);
      sum += p[i];
    }
    for (double& x : p) x /= sum;
    if (s_target >= spec.max_entropy() - 1e-12) {
      // the entropy constraint pins the unique (uniform) distribution; near
      // the entropy maximum dU/dS diverges, so snap instead of projecting
      double u = 0.0;
      for (std::size_t i = 0; i < n; ++i) u += uniform[i] * e[i];
      worst = std::min(worst, u - u_ref);
      continue;
    }
    double h = detail::mixed_entropy(p, p, log_g, 0.0);
    // project to the target entropy by mixing toward uniform (raises) or the
    // ground point mass (lowers); entropy is concave in the mixing weight so
    // the bracket has a single crossing; 1e-12 keeps the induced energy slack
    // below the 1e-9 violation threshold
    const std::vector<double>& q = (h < s_target) ? uniform : ground;
    double t_lo = 0.0, t_hi = 1.0;
    for (int i = 0; i < 100; ++i) {
      const double tm = 0.5 * (t_lo + t_hi);
      const double hm = detail::mixed_entropy(p, q, log_g, tm);
      if (std::fabs(hm - s_target) <= 1e-12) {
        t_lo = t_hi = tm;
        break;
      }
      if ((hm < s_target) == (h < s_target))
        t_lo = tm;
      else
        t_hi = tm;
    }
    const double t = 0.5 * (t_lo + t_hi);
    double u = 0.0;
    for (std::size_t i = 0; i < n; ++i) u += ((1.0 - t) * p[i] + t * q[i]) * e[i];
    worst = std::min(worst, u - u_ref);
  }
  return worst;
}

// True iff pairing descending probabilities with ascending energies minimizes
// the mean energy over permutations (exhaustive for <= 8 states).
inline bool sorted_assignment_check(const FiniteSpectrum& spec,
                                    std::vector<double> probabilities,
                                    std::size_t random_perms = 10000) {
  std::vector<double> e = spec.expanded_energies();
  if (probabilities.size() != e.size())
    throw std::invalid_argument("sorted_assignment_check: probability count mismatch");
  double sum = 0.0;
  for (double x : probabilities) {
    if (!(x >= 0.0)) throw std::invalid_argument("sorted_assignment_check: negative p");
    sum += x;
  }
  if (std::fabs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("sorted_assignment_check: probabilities must sum to 1");

  std::vector<double> desc = probabilities;
  std::sort(desc.begin(), desc.end(), std::greater<double>());
  double u_sorted = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) u_sorted += desc[i] * e[i];

  const auto mean_of = [&](const std::vector<double>& perm) {
    double u = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) u += perm[i] * e[i];
    return u;
  };
  if (e.size() <= 8) {
    std::vector<double> perm = probabilities;
    std::sort(perm.begin(), perm.end());
    do {
      if (u_sorted > mean_of(perm) + 1e-12) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::mt19937_64 rng(0x5eedULL);
    std::vector<double> perm = probabilities;
    for (std::size_t k = 0; k < random_perms; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      if (u_sorted > mean_of(perm) + 1e-12) return false;
    }
  }
  return true;
}

// Spectrum file: one "energy degeneracy" pair per line ('#' comments, blank
// lines ignored); degeneracy defaults to 1 when omitted.
inline FiniteSpectrum parse_spectrum(std::istream& in) {
  std::vector<Level> levels;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double e;
    if (!(ls >> e)) {
      std::string rest;
      std::istringstream check(line);
      if (check >> rest)
        throw std::runtime_error("parse_spectrum: malformed line: " + line);
      continue;  // blank
    }
    double g = 1.0;
    double g_read;
    if (ls >> g_read) {
      g = g_read;
    } else {
      ls.clear();
      std::string rest;
      if (ls >> rest) throw std::runtime_error("parse_spectrum: malformed line: " + line);
    }
    std::string trailing;
    if (ls >> trailing)
      throw std::runtime_error("parse_spectrum: malformed line: " + line);
    levels.push_back({e, g});
  }
  return FiniteSpectrum(std::move(levels));
}

}  // namespace memcost
