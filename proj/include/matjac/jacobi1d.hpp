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

#ifndef MATJAC_JACOBI1D_HPP
#define MATJAC_JACOBI1D_HPP

#include <stdexcept>
#include <type_traits>

#include "matjac/rational.hpp"

namespace matjac {

// Jacobi polynomials on [0,1] for the weight x^r (1-x)^s, r, s > -1,
// normalized as the terminating hypergeometric series
//   p_n(x) = ((r+1)_n / n!) 2F1(-n, n+r+s+1; r+1; x).
// The series is summed with compensated accumulation in floating point and
// exactly for rational scalars.
template <class K>
K jacobi_eval(const K& r, const K& s, int n, const K& x) {
  if (n < 0) throw std::domain_error("jacobi_eval: requires n >= 0");
  if (!(r > K(-1)) || !(s > K(-1))) {
    throw std::domain_error("jacobi_eval: requires r > -1 and s > -1");
  }
  K fact(1);
  for (int j = 2; j <= n; ++j) fact *= K(j);
  K term = rising(K(r + K(1)), n) / fact;
  if constexpr (std::is_floating_point_v<K>) {
    K sum(0), comp(0);
    for (int j = 0; j <= n; ++j) {
      const K y = term - comp;
      const K t = sum + y;
      comp = (t - sum) - y;
      sum = t;
      term *= (K(j) - K(n)) * (K(n) + r + s + K(1) + K(j)) * x /
              ((r + K(1) + K(j)) * (K(1) + K(j)));
    }
    return sum;
  } else {
    K sum(0);
    for (int j = 0; j <= n; ++j) {
      sum += term;
      term *= (K(j) - K(n)) * (K(n) + r + s + K(1) + K(j)) * x /
              ((r + K(1) + K(j)) * (K(1) + K(j)));
    }
    return sum;
  }
}

// p_n(0) = (r+1)_n / n!.
template <class K>
K jacobi_at_zero(const K& r, int n) {
  if (n < 0) throw std::domain_error("jacobi_at_zero: requires n >= 0");
  K fact(1);
  for (int j = 2; j <= n; ++j) fact *= K(j);
  return rising(K(r + K(1)), n) / fact;
}

// Squared L2 norm of p_n against x^r (1-x)^s on [0,1]:
//   1/(2n+r+s+1) * Gamma(r+n+1) Gamma(s+n+1) / (Gamma(n+1) Gamma(n+1+r+s)).
double jacobi_norm_sq(double r, double s, int n);

// Exact value for integer r, s >= 0.
Rat jacobi_norm_sq_rat(long r, long s, int n);

// Euler Beta function B(a, b) on the positive axis.
double beta_fn(double a, double b);

// Exact value for integer a, b >= 1.
Rat beta_fn_rat(long a, long b);

}  // namespace matjac

#endif  // MATJAC_JACOBI1D_HPP
