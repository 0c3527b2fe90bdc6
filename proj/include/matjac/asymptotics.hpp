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

#ifndef MATJAC_ASYMPTOTICS_HPP
#define MATJAC_ASYMPTOTICS_HPP

#include <string>
#include <vector>

#include "matjac/partitions.hpp"

namespace matjac {

// Diagnostics for the large-m regime where the corner keeps fixed
// proportions: p(m)/d(m) -> theta and m/p(m) -> eta. The induced integer
// parameters r(m) = p - m and s(m) = d - p - m may be negative along the
// way; such regimes are still valid for the scaling diagnostics below even
// though the finite-m moment formula needs r, s >= 0.
struct AsymptoticRegime {
  double theta = 0.5;
  double eta = 1.0;

  int p(int m) const;
  int d(int m) const;
  int r(int m) const { return p(m) - m; }
  int s(int m) const { return d(m) - p(m) - m; }
  bool usable_for_moments(int m) const { return r(m) >= 0 && s(m) >= 0; }
};

// Throws unless 0 < theta < 1 and eta > 0.
void check_regime(const AsymptoticRegime& regime);

// K_tau / d converges to |tau|; this is the limit and the finite-m gap.
double k_over_d_limit(const Partition& tau);
double k_over_d_gap(const AsymptoticRegime& regime, const Partition& tau,
                    int m);

// Limit of b_{mu,tau} s_mu(1^m): (-1)^{|mu|} theta^{-|mu|} binom(tau, mu).
double b_smu_limit(const Partition& mu, const Partition& tau, double theta);

// Limit of U_tau(1^m): (1 - 1/theta)^{|tau|}. Equals the sum of
// b_smu_limit over all mu inside tau.
double u_ones_limit(const Partition& tau, double theta);

// Generalized Laguerre polynomial L_n^alpha(x) by its explicit sum.
double laguerre(int n, double alpha, double x);

// n-th moment of the large-m limiting spectral law in the symmetric square
// regime (theta = 1/2, eta = 1):
//   binom(2n, n) / 4^n
//   + 2 / 4^n * sum_{k=1}^n binom(2n, n-k) L_{k-1}^1(2kt) e^{-kt} / k.
double free_jacobi_moment_ref(int n, double t);

struct ScalingRow {
  int m = 0;
  std::string quantity;
  double finite_value = 0.0;
  double limit_value = 0.0;
  double gap = 0.0;  // |finite / limit - 1|
};

// Factor-by-factor comparison of the pieces of the s = 0 moment formula
// against their large-m limits, for one nested triple mu inside tau inside
// alpha of hooks. Requires s(m) = 0 at every requested m. Five quantities
// per m:
//   gamma_ratio      -> (theta / (1 - theta))^{|tau|}
//   bracket_ratio    -> 1
//   finite_rectangle -> 1
//   cross_ratio      -> theta^{|alpha| + |mu| - 2 |tau|}
//   schur_scaling    s_alpha(1^m) / d^{|alpha|} -> (eta theta)^{|alpha|}
//                                                  / H(alpha)
// with H the product of hook lengths of alpha.
std::vector<ScalingRow> scaling_equivalences_report(
    const AsymptoticRegime& regime, const Partition& tau, const Partition& mu,
    const Partition& alpha, const std::vector<int>& m_list);

}  // namespace matjac

#endif  // MATJAC_ASYMPTOTICS_HPP
