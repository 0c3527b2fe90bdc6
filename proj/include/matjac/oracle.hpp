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

#ifndef MATJAC_ORACLE_HPP
#define MATJAC_ORACLE_HPP

#include <functional>
#include <vector>

namespace matjac {

// Gauss rule for the weight x^r (1-x)^s on [0,1].
struct QuadratureRule {
  double r = 0.0;
  double s = 0.0;
  std::vector<double> nodes;    // interior, ascending
  std::vector<double> weights;  // positive, summing to B(r+1, s+1)

  int size() const { return static_cast<int>(nodes.size()); }
};

// Golub-Welsch construction: nodes are eigenvalues of the symmetrized
// three-term recurrence, weights come from the first eigenvector components.
// Exact for polynomial integrands of degree <= 2n - 1.
QuadratureRule gauss_jacobi_rule(double r, double s, int n);

// Integral of f against prod_i x_i^r (1-x_i)^s V(x)^2 over the ordered
// simplex 0 < x_m < ... < x_1 < 1, for symmetric f, computed as 1/m! times
// the tensor-product cube integral. Supported for 1 <= m <= 4.
double symmetric_integral(
    const std::function<double(const std::vector<double>&)>& f, double r,
    double s, int m, int n_nodes);

// Residual |cube integral - m! det(pairings)| of the integral form of the
// Cauchy-Binet identity for the families psi_i, phi_i (i = 1..m) against
// the measure x^r (1-x)^s dx. Zero up to quadrature error whenever the rule
// resolves the integrands.
double cauchy_binet_check(const std::function<double(int, double)>& psi,
                          const std::function<double(int, double)>& phi,
                          double r, double s, int m, int n_nodes);

}  // namespace matjac

#endif  // MATJAC_ORACLE_HPP
