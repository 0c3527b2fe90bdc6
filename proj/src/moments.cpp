// Copyright 2026 The MatJac Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matjac/moments.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "matjac/jacobi1d.hpp"
#include "matjac/linalg.hpp"

namespace matjac {

namespace {

bool is_nonneg_int(double x) {
  return x >= 0.0 && x <= 1e15 && std::floor(x) == x;
}

void check_process_params(const char* who, double r, double s, int m) {
  if (m < 1) throw std::domain_error(std::string(who) + ": requires m >= 1");
  if (!(r >= 0.0) || !(s >= 0.0)) {
    throw std::domain_error(std::string(who) + ": requires r >= 0 and s >= 0");
  }
}

}  // namespace

double k_eigenvalue(double r, double s, int m, const Partition& tau) {
  if (tau.length() > m) {
    throw std::domain_error("k_eigenvalue: requires l(tau) <= m");
  }
  double out = 0.0;
  for (int i = 1; i <= tau.length(); ++i) {
    out += tau.part(i) * (tau.part(i) + r + s + 1 + 2.0 * (m - i));
  }
  return out;
}

long k_eigenvalue_int(long r, long s, int m, const Partition& tau) {
  if (tau.length() > m) {
    throw std::domain_error("k_eigenvalue_int: requires l(tau) <= m");
  }
  long out = 0;
  for (int i = 1; i <= tau.length(); ++i) {
    out += tau.part(i) * (tau.part(i) + r + s + 1 + 2L * (m - i));
  }
  return out;
}

double a_coeff(double r, double s, int m, const Partition& tau) {
  if (tau.length() > m) {
    throw std::domain_error("a_coeff: requires l(tau) <= m");
  }
  const double v = shifted_vandermonde(r, s, m, tau);
  double out = v * v;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const double f = (r + j - i) * i;
      out /= f * f;
    }
  }
  for (int i = 1; i <= m; ++i) {
    const int deg = tau.part(i) + m - i;
    const double z = jacobi_at_zero(r, deg);
    out *= z * z / jacobi_norm_sq(r, s, deg);
  }
  return out;
}

Rat a_coeff_rat(long r, long s, int m, const Partition& tau) {
  if (tau.length() > m) {
    throw std::domain_error("a_coeff_rat: requires l(tau) <= m");
  }
  const Rat v = shifted_vandermonde(Rat(r), Rat(s), m, tau);
  Rat out = v * v;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const Rat f = Rat((r + j - i) * i);
      out /= f * f;
    }
  }
  for (int i = 1; i <= m; ++i) {
    const int deg = tau.part(i) + m - i;
    const Rat z = jacobi_at_zero(Rat(r), deg);
    out *= z * z / jacobi_norm_sq_rat(r, s, deg);
  }
  return out;
}

double beta_determinant(double r, double s, int m, const Partition& alpha,
                        const Partition& mu) {
  SquareMatrix<double> mat(m, std::vector<double>(m));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const double a = alpha.part(i) + mu.part(j) + 2 * m - i - j + r + 1;
      if (!(a > 0.0) || !(s + 1 > 0.0)) {
        throw std::domain_error("beta_determinant: nonpositive Beta argument");
      }
      mat[i - 1][j - 1] = beta_fn(a, s + 1);
    }
  }
  return det_pivoted(std::move(mat));
}

Rat beta_determinant_rat(long r, long s, int m, const Partition& alpha,
                         const Partition& mu) {
  SquareMatrix<Rat> mat(m, std::vector<Rat>(m));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const long a = alpha.part(i) + mu.part(j) + 2L * m - i - j + r + 1;
      if (a <= 0 || s + 1 <= 0) {
        throw std::domain_error(
            "beta_determinant_rat: nonpositive Beta argument");
      }
      mat[i - 1][j - 1] = beta_fn_rat(a, s + 1);
    }
  }
  return det_fraction_free(std::move(mat));
}

double kadell_integral(double r, double s, int m, const Partition& kappa) {
  if (kappa.length() > m) return 0.0;
  double pre = 1.0;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      pre *= kappa.part(i) - kappa.part(j) + j - i;
    }
  }
  double lg = 0.0;
  for (int i = 1; i <= m; ++i) {
    lg += std::lgamma(kappa.part(i) + r + m - i + 1) +
          std::lgamma(s + m - i + 1) -
          std::lgamma(kappa.part(i) + r + s + 2.0 * m - i + 1);
  }
  return pre * std::exp(lg);
}

Rat kadell_integral_rat(long r, long s, int m, const Partition& kappa) {
  if (kappa.length() > m) return Rat(0);
  if (r < 0 || s < 0) {
    throw std::domain_error("kadell_integral_rat: requires r >= 0 and s >= 0");
  }
  Rat out(1);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      out *= Rat(kappa.part(i) - kappa.part(j) + j - i);
    }
  }
  for (int i = 1; i <= m; ++i) {
    out *= rat_factorial(kappa.part(i) + r + m - i);
    out *= rat_factorial(s + m - i);
    out /= rat_factorial(kappa.part(i) + r + s + 2L * m - i);
  }
  return out;
}

double stationary_moment(double r, double s, int m, int n) {
  check_process_params("stationary_moment", r, s, m);
  if (n < 1) throw std::domain_error("stationary_moment: requires n >= 1");
  const double mass = kadell_integral(r, s, m, Partition{});
  double out = 0.0;
  const auto alphas = hooks_alpha(n);
  for (int k = 0; k < n && k < m; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out += sign * kadell_integral(r, s, m, alphas[k]) / mass;
  }
  return out;
}

Rat stationary_moment_rat(long r, long s, int m, int n) {
  check_process_params("stationary_moment_rat", static_cast<double>(r),
                       static_cast<double>(s), m);
  if (n < 1) throw std::domain_error("stationary_moment_rat: requires n >= 1");
  const Rat mass = kadell_integral_rat(r, s, m, Partition{});
  Rat out(0);
  const auto alphas = hooks_alpha(n);
  for (int k = 0; k < n && k < m; ++k) {
    const Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
    out += sign * kadell_integral_rat(r, s, m, alphas[k]) / mass;
  }
  return out;
}

namespace {

// Common assembly for both moment routes. Per-term coefficients are grouped
// by the shape tau, and the value is the sum over shapes of the (exact, on
// the rational path) coefficient sum times e^{-K_tau t/d}. The term list
// keeps the full (k, tau, mu) resolution in a deterministic order.
template <class K>
MomentResult assemble(int n, double t, double d, double r, double s, int m,
                      std::vector<MomentTerm> terms,
                      const std::map<Partition, K>& shape_sums) {
  MomentResult out;
  out.n = n;
  out.t = t;
  out.terms = std::move(terms);
  double value = 0.0;
  for (const auto& [tau, sum] : shape_sums) {
    const double rate = k_eigenvalue(r, s, m, tau);
    value += to_double(sum) * std::exp(-rate * t / d);
  }
  out.value = value;
  return out;
}

template <class K>
std::string coeff_string(const K& coeff) {
  if constexpr (std::is_same_v<K, Rat>) {
    return rat_string(coeff);
  } else {
    (void)coeff;
    return {};
  }
}

// Route through the Beta-function determinant, valid for all r, s >= 0.
template <class K>
MomentResult trace_kernel(const K& r, const K& s, long rl, long sl, int m,
                          int n, double t) {
  constexpr bool exact = std::is_same_v<K, Rat>;
  const double rd = to_double(r), sd = to_double(s);
  const double d = rd + sd + 2.0 * m;
  std::vector<MomentTerm> terms;
  std::map<Partition, K> shape_sums;
  const auto alphas = hooks_alpha(n);
  for (int k = 0; k < n; ++k) {
    const Partition& alpha = alphas[k];
    const K sign = (k % 2 == 0) ? K(1) : K(-1);
    for (const Partition& tau : subhooks_or_empty(alpha)) {
      K head;
      if constexpr (exact) {
        head = sign * a_coeff_rat(rl, sl, m, tau) * u_at_ones(r, s, m, tau);
      } else {
        head = sign * a_coeff(rd, sd, m, tau) * u_at_ones(r, s, m, tau);
      }
      const double damp = std::exp(-k_eigenvalue(rd, sd, m, tau) * t / d);
      for (const Partition& mu : subhooks_or_empty(tau)) {
        K det;
        if constexpr (exact) {
          det = beta_determinant_rat(rl, sl, m, alpha, mu);
        } else {
          det = beta_determinant(rd, sd, m, alpha, mu);
        }
        const K coeff = head * b_coeff(r, s, m, tau, mu) * det;
        shape_sums[tau] += coeff;
        MomentTerm term;
        term.k = k;
        term.tau = tau;
        term.mu = mu;
        term.contribution = to_double(coeff) * damp;
        term.coeff = coeff_string(coeff);
        terms.push_back(std::move(term));
      }
    }
  }
  return assemble(n, t, d, rd, sd, m, std::move(terms), shape_sums);
}

// Independent s = 0 route: Weyl dimensions and factorial ratios replace the
// a coefficient, and the Cauchy product form replaces the determinant.
template <class K>
MomentResult trace_s0_kernel(const K& r, long rl, int m, int n, double t) {
  constexpr bool exact = std::is_same_v<K, Rat>;
  const double rd = to_double(r);
  const double d = rd + 2.0 * m;
  std::vector<MomentTerm> terms;
  std::map<Partition, K> shape_sums;
  const auto alphas = hooks_alpha(n);
  for (int k = 0; k < n; ++k) {
    const Partition& alpha = alphas[k];
    const K sign = (k % 2 == 0) ? K(1) : K(-1);
    K s_alpha;
    if constexpr (exact) {
      s_alpha = schur_at_ones(alpha, m);
    } else {
      s_alpha = to_double(schur_at_ones(alpha, m));
    }
    for (const Partition& tau : subhooks_or_empty(alpha)) {
      K bracket(1);
      for (int i = 1; i <= m; ++i) {
        bracket *= K(2 * (tau.part(i) + m - i)) + r + K(1);
      }
      K gratio(1);
      if constexpr (exact) {
        for (int i = 1; i <= tau.length(); ++i) {
          gratio *= rat_factorial(m - i) *
                    rat_factorial(rl + tau.part(i) + m - i) /
                    (rat_factorial(tau.part(i) + m - i) *
                     rat_factorial(rl + m - i));
        }
      } else {
        double lg = 0.0;
        for (int i = 1; i <= tau.length(); ++i) {
          lg += std::lgamma(m - i + 1.0) +
                std::lgamma(rd + tau.part(i) + m - i + 1) -
                std::lgamma(tau.part(i) + m - i + 1.0) -
                std::lgamma(rd + m - i + 1);
        }
        gratio = std::exp(lg);
      }
      K s_tau;
      if constexpr (exact) {
        s_tau = schur_at_ones(tau, m);
      } else {
        s_tau = to_double(schur_at_ones(tau, m));
      }
      K cross(1);
      for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
          const K f = K(tau.part(i) + tau.part(j) + 2 * m - i - j) + r + K(1);
          cross *= f * f;
        }
      }
      const K head = sign * bracket * gratio * gratio * s_tau * s_tau *
                     u_at_ones(r, K(0), m, tau) * cross * s_alpha;
      const double damp = std::exp(-k_eigenvalue(rd, 0.0, m, tau) * t / d);
      for (const Partition& mu : subhooks_or_empty(tau)) {
        K den(1);
        for (int i = 1; i <= m; ++i) {
          for (int j = 1; j <= m; ++j) {
            den *= K(alpha.part(i) + mu.part(j) + 2 * m - i - j) + r + K(1);
          }
        }
        // b_coeff times s_mu at ones; the Weyl factor cancels, leaving
        // (-1)^{|mu|} binom(tau, mu) C(tau, mu; d) / (r + m)_mu.
        K bsmu(1);
        if (!mu.empty()) {
          const K msign = (mu.weight() % 2 == 0) ? K(1) : K(-1);
          K binom;
          if constexpr (exact) {
            binom = gen_binomial(tau, mu);
          } else {
            binom = to_double(gen_binomial(tau, mu));
          }
          const K x = r + K(2 * m);
          const K base = r + K(m);
          bsmu = msign * binom * c_coeff(tau, mu, x) /
                 gen_pochhammer(base, mu);
        }
        const K coeff = head * bsmu / den;
        shape_sums[tau] += coeff;
        MomentTerm term;
        term.k = k;
        term.tau = tau;
        term.mu = mu;
        term.contribution = to_double(coeff) * damp;
        term.coeff = coeff_string(coeff);
        terms.push_back(std::move(term));
      }
    }
  }
  return assemble(n, t, d, rd, 0.0, m, std::move(terms), shape_sums);
}

}  // namespace

MomentResult expected_trace(double r, double s, int m, int n, double t) {
  check_process_params("expected_trace", r, s, m);
  if (n < 1) throw std::domain_error("expected_trace: requires n >= 1");
  if (m < n) throw std::domain_error("expected_trace: requires m >= n");
  if (!(t >= 0.0)) throw std::domain_error("expected_trace: requires t >= 0");
  if (is_nonneg_int(r) && is_nonneg_int(s)) {
    const long rl = static_cast<long>(r), sl = static_cast<long>(s);
    return trace_kernel(Rat(rl), Rat(sl), rl, sl, m, n, t);
  }
  return trace_kernel(r, s, 0, 0, m, n, t);
}

MomentResult expected_trace_s0(double r, int m, int n, double t) {
  check_process_params("expected_trace_s0", r, 0.0, m);
  if (n < 1) throw std::domain_error("expected_trace_s0: requires n >= 1");
  if (m < n) throw std::domain_error("expected_trace_s0: requires m >= n");
  if (!(t >= 0.0)) {
    throw std::domain_error("expected_trace_s0: requires t >= 0");
  }
  if (is_nonneg_int(r)) {
    const long rl = static_cast<long>(r);
    return trace_s0_kernel(Rat(rl), rl, m, n, t);
  }
  return trace_s0_kernel(r, 0, m, n, t);
}

namespace {

double weight_density(double r, double s, const std::vector<double>& lambda) {
  double out = 1.0;
  const int m = static_cast<int>(lambda.size());
  for (int i = 0; i < m; ++i) {
    out *= std::pow(lambda[i], r) * std::pow(1.0 - lambda[i], s);
    for (int j = i + 1; j < m; ++j) {
      const double diff = lambda[i] - lambda[j];
      out *= diff * diff;
    }
  }
  return out;
}

void check_density_point(const char* who, int m,
                         const std::vector<double>& lambda) {
  if (static_cast<int>(lambda.size()) != m) {
    throw std::invalid_argument(std::string(who) +
                                ": lambda must have exactly m entries");
  }
  for (int i = 0; i < m; ++i) {
    if (!(lambda[i] > 0.0 && lambda[i] < 1.0)) {
      throw std::domain_error(std::string(who) +
                              ": lambda entries must lie in (0, 1)");
    }
    if (i + 1 < m && !(lambda[i] > lambda[i + 1])) {
      throw std::domain_error(std::string(who) +
                              ": lambda must be strictly decreasing");
    }
  }
}

}  // namespace

double density_series_eval(double r, double s, int m, double t,
                           const std::vector<double>& lambda, int max_weight) {
  check_process_params("density_series_eval", r, s, m);
  check_density_point("density_series_eval", m, lambda);
  if (!(t > 0.0)) {
    throw std::domain_error("density_series_eval: requires t > 0");
  }
  const double d = r + s + 2.0 * m;
  double series = 0.0;
  for (int w = 0; w <= max_weight; ++w) {
    for (const Partition& tau : partitions_of_weight(w, m)) {
      const double damp = std::exp(-k_eigenvalue(r, s, m, tau) * t / d);
      series += damp * p_at_ones(r, s, m, tau) * p_tau_det(r, s, m, tau, lambda);
    }
  }
  return series;
}

DensityEvaluation density_eval(double r, double s, int m,
                               const std::vector<double>& lambda, double t,
                               double eps) {
  check_process_params("density_eval", r, s, m);
  check_density_point("density_eval", m, lambda);
  if (!(t > 0.0)) throw std::domain_error("density_eval: requires t > 0");
  if (!(eps > 0.0)) throw std::domain_error("density_eval: requires eps > 0");
  const double d = r + s + 2.0 * m;
  double series = 0.0;
  double shell_abs = 0.0;
  int small_shells = 0;
  int w = 0;
  constexpr int kMaxWeight = 400;
  for (;; ++w) {
    if (w > kMaxWeight) {
      throw std::runtime_error(
          "density_eval: series did not converge; increase t or eps");
    }
    shell_abs = 0.0;
    for (const Partition& tau : partitions_of_weight(w, m)) {
      const double damp = std::exp(-k_eigenvalue(r, s, m, tau) * t / d);
      const double term =
          damp * p_at_ones(r, s, m, tau) * p_tau_det(r, s, m, tau, lambda);
      series += term;
      shell_abs += std::abs(term);
    }
    if (shell_abs < eps * std::max(std::abs(series), 1e-300)) {
      if (++small_shells >= 2) break;
    } else {
      small_shells = 0;
    }
  }
  DensityEvaluation out;
  const double weight = weight_density(r, s, lambda);
  out.value = series * weight;
  out.truncation_weight = w;
  out.tail_estimate = shell_abs * weight;
  return out;
}

}  // namespace matjac
