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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "matjac/jacobi1d.hpp"
#include "matjac/moments.hpp"
#include "matjac/oracle.hpp"
#include "matjac/partitions.hpp"

using namespace matjac;

TEST_CASE("one-point rule at the flat weight") {
  const QuadratureRule rule = gauss_jacobi_rule(0.0, 0.0, 1);
  REQUIRE(rule.size() == 1);
  CHECK(std::abs(rule.nodes[0] - 0.5) < 1e-15);
  CHECK(std::abs(rule.weights[0] - 1.0) < 1e-15);
}

TEST_CASE("weights sum to the Beta mass") {
  for (const auto& [r, s] : std::vector<std::pair<double, double>>{
           {0.0, 0.0}, {1.0, 2.0}, {2.5, 0.5}, {4.0, 4.0}}) {
    for (int n : {3, 8, 20}) {
      const QuadratureRule rule = gauss_jacobi_rule(r, s, n);
      double total = 0.0;
      for (double w : rule.weights) total += w;
      const double mass = beta_fn(r + 1.0, s + 1.0);
      CHECK(std::abs(total - mass) <= 1e-13 * mass);
    }
  }
}

TEST_CASE("rule integrates monomials exactly up to degree 2N - 1") {
  const int n = 5;
  for (const auto& [r, s] : std::vector<std::pair<double, double>>{
           {0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}, {2.5, 0.5}}) {
    const QuadratureRule rule = gauss_jacobi_rule(r, s, n);
    for (int j = 0; j <= 2 * n - 1; ++j) {
      double acc = 0.0;
      for (int q = 0; q < rule.size(); ++q) {
        acc += rule.weights[q] * std::pow(rule.nodes[q], j);
      }
      const double want = beta_fn(r + j + 1.0, s + 1.0);
      CHECK(std::abs(acc - want) <= 1e-13 * want);
    }
  }
}

TEST_CASE("nodes are interior and ascending") {
  const QuadratureRule rule = gauss_jacobi_rule(1.5, 0.5, 24);
  for (int q = 0; q < rule.size(); ++q) {
    CHECK(rule.nodes[q] > 0.0);
    CHECK(rule.nodes[q] < 1.0);
    CHECK(rule.weights[q] > 0.0);
    if (q > 0) CHECK(rule.nodes[q] > rule.nodes[q - 1]);
  }
}

TEST_CASE("symmetric integrals of constants over the ordered simplex") {
  // m = 1: the plain Beta mass.
  const double one = symmetric_integral(
      [](const std::vector<double>&) { return 1.0; }, 1.0, 2.0, 1, 12);
  CHECK(std::abs(one - beta_fn(2.0, 3.0)) < 1e-14);
  // m = 2, flat weight: int over x > y of (x - y)^2 is 1/12.
  const double two = symmetric_integral(
      [](const std::vector<double>&) { return 1.0; }, 0.0, 0.0, 2, 12);
  CHECK(std::abs(two - 1.0 / 12.0) < 1e-14);
}

TEST_CASE("Schur averages over the stationary weight match the closed form") {
  for (long r = 0; r <= 2; ++r) {
    for (long s = 0; s <= 2; ++s) {
      for (int w = 0; w <= 3; ++w) {
        for (const Partition& kappa : partitions_of_weight(w, 2)) {
          const double via_quad = symmetric_integral(
              [&](const std::vector<double>& x) {
                return schur_eval(kappa, x);
              },
              static_cast<double>(r), static_cast<double>(s), 2, 16);
          const double closed = kadell_integral(static_cast<double>(r),
                                                static_cast<double>(s), 2,
                                                kappa);
          CHECK(std::abs(via_quad - closed) <=
                1e-12 * std::max(std::abs(closed), 1e-6));
        }
      }
    }
  }
}

TEST_CASE("determinant-pair integrals factor into pairing determinants") {
  // Polynomial families resolved exactly by the rule.
  const auto mono = [](int i, double x) { return std::pow(x, i - 1); };
  const auto shifted = [](int i, double x) {
    return std::pow(1.0 - x, i - 1);
  };
  for (int m = 1; m <= 3; ++m) {
    CHECK(cauchy_binet_check(mono, mono, 0.0, 0.0, m, 12) < 1e-14);
    CHECK(cauchy_binet_check(mono, shifted, 1.0, 2.0, m, 12) < 1e-14);
  }
  // Orthonormal family: the pairing matrix is the identity.
  const auto normalized = [](int i, double x) {
    return jacobi_eval(1.0, 2.0, i - 1, x) /
           std::sqrt(jacobi_norm_sq(1.0, 2.0, i - 1));
  };
  CHECK(cauchy_binet_check(normalized, normalized, 1.0, 2.0, 3, 12) < 1e-13);
}
