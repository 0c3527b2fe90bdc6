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

#include "matjac/symjacobi.hpp"

#include <cmath>

#include "matjac/linalg.hpp"

namespace matjac {

std::vector<Partition> subhooks_or_empty(const Partition& tau) {
  if (tau.empty()) return {Partition{}};
  return subhooks(tau);
}

namespace {

void require_separated(const std::vector<double>& x) {
  constexpr double kMinGap = 1e-8;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (std::abs(x[i] - x[j]) < kMinGap) {
        throw std::domain_error(
            "coordinates must be pairwise separated by at least 1e-8");
      }
    }
  }
}

double det_over_vandermonde(int m, const std::vector<int>& degrees,
                            const std::vector<double>& values) {
  // values is row-major m x m: values[i*m + j] = f_{degrees[i]}(x_j).
  SquareMatrix<double> a(m, std::vector<double>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = values[i * m + j];
  }
  return det_pivoted(a);
}

}  // namespace

double p_tau_det(double r, double s, int m, const Partition& tau,
                 const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m || m < 1) {
    throw std::invalid_argument("p_tau_det: requires |x| = m >= 1");
  }
  if (tau.length() > m) {
    throw std::invalid_argument("p_tau_det: requires l(tau) <= m");
  }
  require_separated(x);
  std::vector<int> degrees(m);
  std::vector<double> values(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    const int deg = tau.part(i + 1) + m - (i + 1);
    degrees[i] = deg;
    const double norm = std::sqrt(jacobi_norm_sq(r, s, deg));
    for (int j = 0; j < m; ++j) {
      values[i * m + j] = jacobi_eval(r, s, deg, x[j]) / norm;
    }
  }
  double vand = 1.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) vand *= x[i] - x[j];
  }
  return det_over_vandermonde(m, degrees, values) / vand;
}

double q_tau_det(double r, double s, int m, const Partition& tau,
                 const std::vector<double>& y) {
  if (static_cast<int>(y.size()) != m || m < 1) {
    throw std::invalid_argument("q_tau_det: requires |y| = m >= 1");
  }
  if (tau.length() > m) {
    throw std::invalid_argument("q_tau_det: requires l(tau) <= m");
  }
  require_separated(y);
  std::vector<int> degrees(m);
  std::vector<double> values(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    const int deg = tau.part(i + 1) + m - (i + 1);
    degrees[i] = deg;
    for (int j = 0; j < m; ++j) {
      values[i * m + j] = jacobi_eval(r, s, deg, (1.0 - y[j]) / 2.0);
    }
  }
  double vand = 1.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) vand *= y[i] - y[j];
  }
  return det_over_vandermonde(m, degrees, values) / vand;
}

double q_at_ones(double r, double s, int m, const Partition& tau) {
  if (tau.length() > m) {
    throw std::invalid_argument("q_at_ones: requires l(tau) <= m");
  }
  double out = shifted_vandermonde(r, s, m, tau);
  for (int i = 1; i <= m; ++i) {
    const double shifted = tau.part(i) + m - i;
    out *= std::exp(std::lgamma(shifted + r + 1.0) -
                    std::lgamma(shifted + 1.0) -
                    std::lgamma(m - i + r + 1.0) -
                    std::lgamma(m - i + 1.0)) *
           std::pow(2.0, -(m - i));
  }
  return out;
}

Rat q_at_ones_rat(long r, long s, int m, const Partition& tau) {
  if (tau.length() > m) {
    throw std::invalid_argument("q_at_ones_rat: requires l(tau) <= m");
  }
  if (r < 0 || s < 0) {
    throw std::domain_error("q_at_ones_rat: requires r, s >= 0");
  }
  Rat out = shifted_vandermonde(Rat(r), Rat(s), m, tau);
  for (int i = 1; i <= m; ++i) {
    const long shifted = tau.part(i) + m - i;
    out *= rat_factorial(shifted + r) /
           (rat_factorial(shifted) * rat_factorial(m - i + r) *
            rat_factorial(m - i));
    out /= int_pow(Rat(2), m - i);
  }
  return out;
}

double p_at_ones(double r, double s, int m, const Partition& tau) {
  if (tau.length() > m) {
    throw std::invalid_argument("p_at_ones: requires l(tau) <= m");
  }
  // At (1,...,1) the [-1,1] argument is (-1,...,-1); the mirror symmetry
  // swaps (r, s) and contributes (-1)^{|tau|}.
  double out = q_at_ones(s, r, m, tau);
  if (tau.weight() % 2 != 0) out = -out;
  const int pairs = m * (m - 1) / 2;
  out *= std::pow(-2.0, pairs);
  for (int i = 1; i <= m; ++i) {
    out /= std::sqrt(jacobi_norm_sq(r, s, tau.part(i) + m - i));
  }
  return out;
}

double proportionality_constant(double r, double s, int m,
                                const Partition& tau) {
  if (tau.length() > m) {
    throw std::invalid_argument(
        "proportionality_constant: requires l(tau) <= m");
  }
  double out = shifted_vandermonde(r, s, m, tau);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) out /= (r + j - i) * i;
  }
  for (int i = 1; i <= m; ++i) {
    const int deg = tau.part(i) + m - i;
    out *= jacobi_at_zero(r, deg) / std::sqrt(jacobi_norm_sq(r, s, deg));
  }
  const int pairs = m * (m - 1) / 2;
  return (pairs % 2 == 0) ? out : -out;
}

}  // namespace matjac
