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

#ifndef MATJAC_LINALG_HPP
#define MATJAC_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace matjac {

// Square matrix stored as rows. Small sizes only (the determinants in this
// library are at most m x m with m <= a few dozen).
template <class K>
using SquareMatrix = std::vector<std::vector<K>>;

// Fraction-free Bareiss elimination. Exact over an exact scalar type; every
// division is exact (the divisor is the previous pivot, a leading minor).
template <class K>
K det_fraction_free(SquareMatrix<K> a) {
  const std::size_t n = a.size();
  if (n == 0) return K(1);
  K prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return K(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = K(0);
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : K(-a[n - 1][n - 1]);
}

// Partially pivoted Gaussian elimination for floating point.
double det_pivoted(SquareMatrix<double> a);

}  // namespace matjac

#endif  // MATJAC_LINALG_HPP
