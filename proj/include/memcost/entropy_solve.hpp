#pragma once
// Inverts the entropy constraint S_n(beta) + S_l(beta) = S for beta and
// evaluates the dimensionless sum-form cost C~ = U_n + U_l at the solution,
// alongside the closed-form comparison value d(e^{S/d} - 1).

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "memcost/thermo.hpp"

namespace memcost {

struct EntropyTarget {
  double s_total;  // nats
  Dimension d;
};

struct SumCost {
  double beta_solution = 0.0;
  double c_tilde = 0.0;      // C~ / (hbar sqrt(kappa/m)), i.e. U_n + U_l
  double lemma_value = 0.0;  // d (e^{S/d} - 1)
  Method method = Method::asymptotic;
};

struct SolveOptions {
  double entropy_tol = 1e-10;    // absolute, nats
  std::size_t max_terms = 400000;
  double tail_tol = 1e-15;
  int max_bisections = 200;
};

// Bisection on beta using monotone decrease of total entropy in beta.
// Bracket grown geometrically from [1e-6, 1e2].
inline Beta beta_for_entropy(const EntropyTarget& target, Method method,
                             const SolveOptions& opt = {}) {
  if (!(target.s_total > 0.0) || !std::isfinite(target.s_total))
    throw std::invalid_argument("beta_for_entropy: s_total must be finite and > 0");
  // A Z_l sum that is still growing at the term cap means an entropy far above
  // any solvable target, so treat non-convergence at small beta as +infinity;
  // it only matters while the bracket end sits below the solution.
  const auto entropy_at = [&](double b) {
    try {
      return thermo_state(Beta(b), target.d, method, opt.max_terms, opt.tail_tol)
          .total_entropy();
    } catch (const std::runtime_error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  double lo = 1e-6, hi = 1e2;
  for (int i = 0; entropy_at(lo) < target.s_total; ++i) {
    if (i > 60) throw std::runtime_error("beta_for_entropy: bracket exhausted (low side)");
    lo /= 16.0;
  }
  for (int i = 0; entropy_at(hi) > target.s_total; ++i) {
    if (i > 60) throw std::runtime_error("beta_for_entropy: bracket exhausted (high side)");
    hi *= 16.0;
  }
  double mid = std::sqrt(lo * hi);
  for (int i = 0; i < opt.max_bisections; ++i) {
    mid = std::sqrt(lo * hi);  // bisect in log(beta); S varies over decades
    const double s = entropy_at(mid);
    if (std::fabs(s - target.s_total) <= opt.entropy_tol) return Beta(mid);
    if (s > target.s_total)
      lo = mid;
    else
      hi = mid;
  }
  // the returned beta must itself evaluate cleanly
  (void)thermo_state(Beta(mid), target.d, method, opt.max_terms, opt.tail_tol);
  return Beta(mid);
}

inline SumCost sum_cost(const EntropyTarget& target, Method method,
                        const SolveOptions& opt = {}) {
  const Beta beta = beta_for_entropy(target, method, opt);
  const ThermoState st = thermo_state(beta, target.d, method, opt.max_terms, opt.tail_tol);
  SumCost out;
  out.beta_solution = beta.value();
  out.c_tilde = st.total_energy();
  const double d = target.d.value();
  out.lemma_value = d * std::expm1(target.s_total / d);
  out.method = method;
  return out;
}

}  // namespace memcost
