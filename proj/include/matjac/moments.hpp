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

#ifndef MATJAC_MOMENTS_HPP
#define MATJAC_MOMENTS_HPP

#include <string>
#include <vector>

#include "matjac/partitions.hpp"
#include "matjac/rational.hpp"
#include "matjac/symjacobi.hpp"

namespace matjac {

// Closed-form moments E[tr(J^n)] at time t of the m x m matrix process
// J = X X* built from the m x p corner X of a unitary Brownian motion on
// U(d), with r = p - m >= 0 and s = d - p - m >= 0. Time is normalized so
// that every decay rate is K_tau / d; the n = 1 moment relaxes like e^{-t}.

// Decay rate K_tau = sum_i tau_i (tau_i + r + s + 1 + 2(m - i)).
double k_eigenvalue(double r, double s, int m, const Partition& tau);
long k_eigenvalue_int(long r, long s, int m, const Partition& tau);

// Squared leading coefficient a_tau relating the two polynomial
// normalizations; a_empty is the reciprocal of the weight's total mass.
double a_coeff(double r, double s, int m, const Partition& tau);
Rat a_coeff_rat(long r, long s, int m, const Partition& tau);

// Schur-expansion coefficient of U_tau (1 at mu empty).
template <class K>
K b_coeff(const K& r, const K& s, int m, const Partition& tau,
          const Partition& mu) {
  return u_expansion_coeff(r, s, m, tau, mu);
}

// det[ B(alpha_i + mu_j + 2m - i - j + r + 1, s + 1) ]_{i,j=1..m}.
// Every Beta argument must be positive.
double beta_determinant(double r, double s, int m, const Partition& alpha,
                        const Partition& mu);
Rat beta_determinant_rat(long r, long s, int m, const Partition& alpha,
                         const Partition& mu);

// Closed product form of the same determinant at s = 0:
//   prod_{i<j} (alpha_i - alpha_j + j - i)(mu_i - mu_j + j - i)
//   / prod_{i,j} (alpha_i + mu_j + 2m - i - j + r + 1).
template <class K>
K cauchy_determinant_path(const K& r, int m, const Partition& alpha,
                          const Partition& mu) {
  K num(1);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      num *= K(alpha.part(i) - alpha.part(j) + j - i);
      num *= K(mu.part(i) - mu.part(j) + j - i);
    }
  }
  K den(1);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      den *= K(alpha.part(i) + mu.part(j) + 2 * m - i - j) + r + K(1);
    }
  }
  return num / den;
}

// int s_kappa(x) W(x) dx over the ordered simplex:
//   prod_{i<j} (kappa_i - kappa_j + j - i)
//   * prod_i Gamma(kappa_i+r+m-i+1) Gamma(s+m-i+1) / Gamma(kappa_i+r+s+2m-i+1).
double kadell_integral(double r, double s, int m, const Partition& kappa);
Rat kadell_integral_rat(long r, long s, int m, const Partition& kappa);

// n-th stationary trace moment: power-sum expansion in hooks integrated
// against the normalized weight.
double stationary_moment(double r, double s, int m, int n);
Rat stationary_moment_rat(long r, long s, int m, int n);

// One (k, tau, mu) term of the moment formula. On the exact path, coeff
// holds the rational coefficient multiplying e^{-K_tau t/d} as "num/den";
// contribution is its double value times that exponential.
struct MomentTerm {
  int k = 0;
  Partition tau;
  Partition mu;
  double contribution = 0.0;
  std::string coeff;
};

struct MomentResult {
  int n = 0;
  double t = 0.0;
  double value = 0.0;
  std::vector<MomentTerm> terms;
};

// E[tr(J^n)] at time t. Requires m >= n, r >= 0, s >= 0, t >= 0. When r and
// s are integers the coefficients are computed in exact rational arithmetic
// and the value is assembled from per-shape exact sums, so the ledger
// determines the value bit for bit.
MomentResult expected_trace(double r, double s, int m, int n, double t);

// Independent s = 0 route: Weyl dimension products and the Cauchy
// determinant in place of the Beta-function determinant.
MomentResult expected_trace_s0(double r, int m, int n, double t);

struct DensityEvaluation {
  double value = 0.0;         // density of the ordered spectrum at lambda
  int truncation_weight = 0;  // highest partition weight included
  double tail_estimate = 0.0; // last shell's size, in the units of value
};

// Eigenvalue density at time t > 0 started from the identity, evaluated at
// an ordered interior point lambda_1 > ... > lambda_m. The bilinear series
// is summed over partition-weight shells until two consecutive shells fall
// below eps relative to the running sum.
DensityEvaluation density_eval(double r, double s, int m,
                               const std::vector<double>& lambda, double t,
                               double eps);

// Partial bilinear series sum_{|tau| <= max_weight} e^{-K_tau t/d}
// P_tau(1^m) P_tau(lambda), without the weight factor W(lambda).
double density_series_eval(double r, double s, int m, double t,
                           const std::vector<double>& lambda, int max_weight);

}  // namespace matjac

#endif  // MATJAC_MOMENTS_HPP
