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

#include "matjac/jacobi1d.hpp"

#include <cmath>

namespace matjac {

double jacobi_norm_sq(double r, double s, int n) {
  if (n < 0) throw std::domain_error("jacobi_norm_sq: requires n >= 0");
  if (r <= -1.0 || s <= -1.0) {
    throw std::domain_error("jacobi_norm_sq: requires r > -1 and s > -1");
  }
  const double lg = std::lgamma(r + n + 1) + std::lgamma(s + n + 1) -
                    std::lgamma(n + 1.0) - std::lgamma(n + 1.0 + r + s);
  return std::exp(lg) / (2.0 * n + r + s + 1.0);
}

Rat jacobi_norm_sq_rat(long r, long s, int n) {
  if (n < 0) throw std::domain_error("jacobi_norm_sq_rat: requires n >= 0");
  if (r < 0 || s < 0) {
    throw std::domain_error("jacobi_norm_sq_rat: requires r, s >= 0");
  }
  const Rat num = rat_factorial(r + n) * rat_factorial(s + n);
  const Rat den = rat_factorial(n) * rat_factorial(n + r + s);
  return num / den / Rat(2 * n + r + s + 1);
}

double beta_fn(double a, double b) {
  if (a <= 0.0 || b <= 0.0) {
    throw std::domain_error("beta_fn: requires a > 0 and b > 0");
  }
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

Rat beta_fn_rat(long a, long b) {
  if (a <= 0 || b <= 0) {
    throw std::domain_error("beta_fn_rat: requires a > 0 and b > 0");
  }
  return rat_factorial(a - 1) * rat_factorial(b - 1) / rat_factorial(a + b - 1);
}

}  // namespace matjac
