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

#include "matjac/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "matjac/jacobi1d.hpp"
#include "matjac/linalg.hpp"

namespace matjac {

QuadratureRule gauss_jacobi_rule(double r, double s, int n) {
  if (n < 1) throw std::domain_error("gauss_jacobi_rule: requires n >= 1");
  if (r <= -1.0 || s <= -1.0) {
    throw std::domain_error("gauss_jacobi_rule: requires r > -1 and s > -1");
  }
  // Recurrence for the weight (1-u)^a (1+u)^b on [-1,1]; the map
  // x = (1+u)/2 sends it to x^r (1-x)^s with a = s, b = r.
  const double a = s, b = r;
  Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    double alpha;
    if (k == 0) {
      alpha = (b - a) / (a + b + 2.0);
    } else {
      const double den = (2.0 * k + a + b) * (2.0 * k + a + b + 2.0);
      alpha = (b * b - a * a) / den;
    }
    jm(k, k) = alpha;
    if (k >= 1) {
      const double num =
          4.0 * k * (k + a) * (k + b) * (k + a + b);
      const double den = (2.0 * k + a + b) * (2.0 * k + a + b) *
                         (2.0 * k + a + b + 1.0) * (2.0 * k + a + b - 1.0);
      const double off = std::sqrt(num / den);
      jm(k, k - 1) = off;
      jm(k - 1, k) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi_rule: eigensolver failed");
  }
  const double mass = beta_fn(r + 1.0, s + 1.0);
  QuadratureRule rule;
  rule.r = r;
  rule.s = s;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (1.0 + es.eigenvalues()(i));
    const double q0 = es.eigenvectors()(0, i);
    rule.weights[i] = mass * q0 * q0;
  }
  return rule;
}

namespace {

// Applies fn to every tensor-grid point of the rule, passing the point and
// its product weight.
void for_each_grid_point(
    const QuadratureRule& rule, int m,
    const std::function<void(const std::vector<double>&, double)>& fn) {
  const int n = rule.size();
  std::vector<int> idx(m, 0);
  std::vector<double> x(m);
  while (true) {
    double w = 1.0;
    for (int i = 0; i < m; ++i) {
      x[i] = rule.nodes[idx[i]];
      w *= rule.weights[idx[i]];
    }
    fn(x, w);
    int pos = m - 1;
    while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
    if (pos < 0) break;
  }
}

double vandermonde(const std::vector<double>& x) {
  double v = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= x[i] - x[j];
  }
  return v;
}

}  // namespace

double symmetric_integral(
    const std::function<double(const std::vector<double>&)>& f, double r,
    double s, int m, int n_nodes) {
  if (m < 1 || m > 4) {
    throw std::domain_error("symmetric_integral: requires 1 <= m <= 4");
  }
  const QuadratureRule rule = gauss_jacobi_rule(r, s, n_nodes);
  double sum = 0.0;
  for_each_grid_point(rule, m, [&](const std::vector<double>& x, double w) {
    const double v = vandermonde(x);
    sum += f(x) * v * v * w;
  });
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  return sum / mfact;
}

double cauchy_binet_check(const std::function<double(int, double)>& psi,
                          const std::function<double(int, double)>& phi,
                          double r, double s, int m, int n_nodes) {
  if (m < 1 || m > 4) {
    throw std::domain_error("cauchy_binet_check: requires 1 <= m <= 4");
  }
  const QuadratureRule rule = gauss_jacobi_rule(r, s, n_nodes);

  double lhs = 0.0;
  for_each_grid_point(rule, m, [&](const std::vector<double>& x, double w) {
    SquareMatrix<double> mp(m, std::vector<double>(m));
    SquareMatrix<double> mq(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        mp[i][j] = psi(i + 1, x[j]);
        mq[i][j] = phi(i + 1, x[j]);
      }
    }
    lhs += det_pivoted(mp) * det_pivoted(mq) * w;
  });

  SquareMatrix<double> pairings(m, std::vector<double>(m, 0.0));
  for (int q = 0; q < rule.size(); ++q) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        pairings[i][j] +=
            psi(i + 1, rule.nodes[q]) * phi(j + 1, rule.nodes[q]) *
            rule.weights[q];
      }
    }
  }
  double mfact = 1.0;
  for (int i = 2; i <= m; ++i) mfact *= i;
  const double rhs = mfact * det_pivoted(pairings);
  return std::abs(lhs - rhs);
}

}  // namespace matjac
