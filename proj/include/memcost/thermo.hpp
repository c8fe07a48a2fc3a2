#pragma once
// Partition functions and canonical thermodynamics of the two uncoupled
// subsystems: Z = Z_n * Z_l with
//   Z_n = sum_n exp(-2 beta n)                      (geometric, closed form)
//   Z_l = sum_l g(l) exp(-beta sqrt(l(l+d-2)))      (log-sum-exp, or steepest descent)

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "memcost/spectrum.hpp"

namespace memcost {

class Beta {
 public:
  explicit Beta(double b) : b_(b) {
    if (!(b > 0.0) || !std::isfinite(b))
      throw std::invalid_argument("Beta: must be finite and > 0");
  }
  double value() const { return b_; }

 private:
  double b_;
};

enum class Method { direct, asymptotic };

// ln Z_n = -ln(1 - e^{-2 beta})
inline double z_n_log(Beta beta) { return -std::log1p(-std::exp(-2.0 * beta.value())); }

// U_n = 2 / (e^{2 beta} - 1)
inline double u_n_exact(Beta beta) { return 2.0 / std::expm1(2.0 * beta.value()); }

// S_n = ln(1 + U_n/2) + (U_n/2) ln(1 + 2/U_n), with S_n(0) = 0.
inline double s_n_exact(double u_n) {
  if (u_n < 0.0) throw std::invalid_argument("s_n_exact: u_n must be >= 0");
  if (u_n == 0.0) return 0.0;
  return std::log1p(u_n / 2.0) + (u_n / 2.0) * std::log1p(2.0 / u_n);
}

struct LogZl {
  double value = 0.0;
  bool converged = false;     // tail criterion met before the term cap
  bool still_growing = false; // cap hit before the summand peak
  std::size_t terms = 0;
};

// Direct log-sum-exp accumulation of Z_l. The summand ln g(l) - beta*sqrt(l(l+d-2))
// is unimodal in l; termination requires being past the peak and the current term
// falling below tail_tol relative to the running sum.
inline LogZl z_l_log_direct(Beta beta, Dimension dim, std::size_t max_terms = 1600,
                            double tail_tol = 1e-15) {
  if (max_terms < 1) throw std::invalid_argument("z_l_log_direct: max_terms must be >= 1");
  if (!(tail_tol > 0.0)) throw std::invalid_argument("z_l_log_direct: tail_tol must be > 0");
  const double b = beta.value();
  const double d = dim.value();
  const double log_tail = std::log(tail_tol);

  double max_term = 0.0;  // l = 0 term is ln g(0) = 0
  double acc = 1.0;       // sum of exp(term - max_term)
  bool past_peak = false;
  double prev_term = 0.0;
  LogZl result;
  result.terms = 1;
  for (std::size_t l = 1; l < max_terms; ++l) {
    const double ld = static_cast<double>(l);
    const double term =
        log_degeneracy(static_cast<long>(l), dim) - b * std::sqrt(ld * (ld + d - 2.0));
    if (term < prev_term) past_peak = true;
    prev_term = term;
    if (term > max_term) {
      acc = acc * std::exp(max_term - term) + 1.0;
      max_term = term;
    } else {
      acc += std::exp(term - max_term);
    }
    ++result.terms;
    if (past_peak && term - (max_term + std::log(acc)) < log_tail) {
      result.converged = true;
      break;
    }
  }
  result.value = max_term + std::log(acc);
  result.still_growing = !past_peak && !result.converged;
  return result;
}

// Steepest-descent approximation Z_l ~ 2 beta^{-(d-1)}.
inline double z_l_log_steepest(Beta beta, Dimension dim) {
  return std::log(2.0) - (dim.value() - 1.0) * std::log(beta.value());
}

struct ThermoState {
  double beta = 0.0;
  int d = 0;
  double log_z_n = 0.0;
  double log_z_l = 0.0;
  double u_n = 0.0;
  double u_l = 0.0;
  double s_n = 0.0;
  double s_l = 0.0;
  Method method = Method::asymptotic;

  double total_energy() const { return u_n + u_l; }
  double total_entropy() const { return s_n + s_l; }
};

// Direct mode: U_l = -d(ln Z_l)/d(beta) by central difference (relative step 1e-5),
// S_l = beta*U_l + ln Z_l. Asymptotic mode: U_l = (d-1)/beta,
// S_l = (d-1)(ln(U_l/(d-1)) + 1). U_n, S_n always from the exact closed forms.
inline ThermoState thermo_state(Beta beta, Dimension dim, Method method,
                                std::size_t max_terms = 1600, double tail_tol = 1e-15) {
  ThermoState st;
  st.beta = beta.value();
  st.d = dim.value();
  st.method = method;
  st.log_z_n = z_n_log(beta);
  st.u_n = u_n_exact(beta);
  st.s_n = s_n_exact(st.u_n);
  const double b = beta.value();
  if (method == Method::asymptotic) {
    st.log_z_l = z_l_log_steepest(beta, dim);
    st.u_l = (st.d - 1.0) / b;
    st.s_l = (st.d - 1.0) * (std::log(st.u_l / (st.d - 1.0)) + 1.0);
  } else {
    const LogZl z = z_l_log_direct(beta, dim, max_terms, tail_tol);
    if (!z.converged)
      throw std::runtime_error("thermo_state: Z_l sum did not converge within max_terms");
    const double h = b * 1e-5;
    const LogZl zp = z_l_log_direct(Beta(b + h), dim, max_terms, tail_tol);
    const LogZl zm = z_l_log_direct(Beta(b - h), dim, max_terms, tail_tol);
    if (!zp.converged || !zm.converged)
      throw std::runtime_error("thermo_state: Z_l sum did not converge within max_terms");
    st.log_z_l = z.value;
    st.u_l = -(zp.value - zm.value) / (2.0 * h);
    st.s_l = b * st.u_l + z.value;
  }
  return st;
}

}  // namespace memcost
