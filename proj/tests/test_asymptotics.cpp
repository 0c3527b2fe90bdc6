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
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "matjac/asymptotics.hpp"
#include "matjac/moments.hpp"
#include "matjac/partitions.hpp"

using namespace matjac;

TEST_CASE("regime geometry") {
  AsymptoticRegime reg;
  reg.theta = 0.5;
  reg.eta = 1.0;
  CHECK(reg.p(10) == 10);
  CHECK(reg.d(10) == 20);
  CHECK(reg.r(10) == 0);
  CHECK(reg.s(10) == 0);
  CHECK(reg.usable_for_moments(10));

  AsymptoticRegime narrow;
  narrow.theta = 0.4;
  narrow.eta = 1.5;
  CHECK(narrow.p(30) == 20);
  CHECK(narrow.d(30) == 50);
  CHECK(narrow.r(30) == -10);
  CHECK(narrow.s(30) == 0);
  CHECK_FALSE(narrow.usable_for_moments(30));

  CHECK_NOTHROW(check_regime(reg));
  AsymptoticRegime bad = reg;
  bad.theta = 0.0;
  CHECK_THROWS(check_regime(bad));
  bad.theta = 1.0;
  CHECK_THROWS(check_regime(bad));
  bad.theta = 0.5;
  bad.eta = 0.0;
  CHECK_THROWS(check_regime(bad));
}

TEST_CASE("Laguerre polynomials against the standard library") {
  for (int n = 0; n <= 6; ++n) {
    for (int alpha = 0; alpha <= 2; ++alpha) {
      for (double x : {0.0, 0.2, 1.0, 3.5, 8.0}) {
        const double want = std::assoc_laguerre(n, alpha, x);
        const double got = laguerre(n, static_cast<double>(alpha), x);
        CHECK(std::abs(got - want) <= 1e-11 * std::max(1.0, std::abs(want)));
      }
    }
  }
  CHECK(laguerre(1, 1.0, 0.7) == doctest::Approx(2.0 - 0.7));
  CHECK(laguerre(2, 0.0, 0.9) ==
        doctest::Approx(1.0 - 2.0 * 0.9 + 0.9 * 0.9 / 2.0));
}

TEST_CASE("limit moments start at one and relax to the semicircle mass") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(std::abs(free_jacobi_moment_ref(n, 0.0) - 1.0) < 1e-12);
  }
  for (int i = 0; i < 20; ++i) {
    const double t = 0.1 + 0.35 * i;
    const double want = 0.5 + 0.5 * std::exp(-t);
    CHECK(std::abs(free_jacobi_moment_ref(1, t) - want) < 1e-12);
  }
  // Second moment written out by hand.
  for (double t : {0.3, 1.0, 2.5}) {
    const double want = 6.0 / 16.0 +
                        (2.0 / 16.0) * (4.0 * std::exp(-t) +
                                        0.5 * (2.0 - 4.0 * t) *
                                            std::exp(-2.0 * t));
    CHECK(std::abs(free_jacobi_moment_ref(2, t) - want) < 1e-12);
  }
  // Long-time limit: central binomial mass.
  double binom = 1.0;
  for (int n = 1; n <= 6; ++n) {
    binom = binom * (2.0 * n) * (2.0 * n - 1.0) / (n * n);
    const double want = binom / std::pow(4.0, n);
    CHECK(std::abs(free_jacobi_moment_ref(n, 60.0) - want) < 1e-12);
  }
}

TEST_CASE("limit expansion coefficients sum to the limit value at ones") {
  for (double theta : {0.3, 0.5, 0.7}) {
    for (int w = 1; w <= 4; ++w) {
      for (const Partition& tau : hooks_alpha(w)) {
        double total = 0.0;
        for (const Partition& mu : subhooks(tau)) {
          total += b_smu_limit(mu, tau, theta);
        }
        const double want = u_ones_limit(tau, theta);
        CHECK(std::abs(total - want) <= 1e-12 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST_CASE("decay rates scale to the partition weight") {
  AsymptoticRegime reg;
  reg.theta = 0.5;
  reg.eta = 1.0;
  CHECK(k_over_d_limit(Partition{2, 1}) == 3.0);
  CHECK(k_over_d_gap(reg, Partition{1}, 100) == 0.0);
  // For tau = (2) in the square regime the finite ratio is 2 + 1/m, so
  // the gap to the weight is 1/m.
  CHECK(k_over_d_gap(reg, Partition{2}, 100) ==
        doctest::Approx(1.0 / 100.0).epsilon(1e-10));
  // Gaps shrink as m grows.
  for (const Partition& tau : {Partition{2}, Partition{3}, Partition{2, 1}}) {
    double prev = k_over_d_gap(reg, tau, 50);
    for (int m : {100, 200, 400}) {
      const double cur = k_over_d_gap(reg, tau, m);
      CHECK(cur <= prev);
      prev = cur;
    }
    CHECK(prev < 0.01);
  }
}

TEST_CASE("finite expansion coefficients approach their limits") {
  // Square regime: r = s = 0, d = 2m.
  const int m = 400;
  const Partition tau{2, 1};
  for (const Partition& mu : subhooks(tau)) {
    const double finite = b_coeff(0.0, 0.0, m, tau, mu) *
                          to_double(schur_at_ones(mu, m));
    const double limit = b_smu_limit(mu, tau, 0.5);
    CHECK(std::abs(finite / limit - 1.0) < 0.01);
  }
  const double u_finite = u_at_ones(0.0, 0.0, m, tau);
  const double u_limit = u_ones_limit(tau, 0.5);
  CHECK(std::abs(u_finite / u_limit - 1.0) < 0.01);
}

TEST_CASE("scaling report: square regime gaps shrink along m") {
  AsymptoticRegime reg;
  reg.theta = 0.5;
  reg.eta = 1.0;
  const std::vector<int> ms{50, 100, 200, 400};
  const auto rows = scaling_equivalences_report(reg, Partition{2, 1},
                                                Partition{1}, Partition{2, 1},
                                                ms);
  REQUIRE(rows.size() == 5 * ms.size());
  std::map<std::string, std::vector<double>> by_quantity;
  for (const auto& row : rows) {
    CHECK(std::isfinite(row.finite_value));
    CHECK(std::isfinite(row.limit_value));
    by_quantity[row.quantity].push_back(row.gap);
  }
  REQUIRE(by_quantity.size() == 5);
  for (const auto& [name, gaps] : by_quantity) {
    REQUIRE(gaps.size() == ms.size());
    for (std::size_t i = 1; i < gaps.size(); ++i) {
      CHECK(gaps[i] <= gaps[i - 1]);
    }
    CHECK(gaps.back() < 0.01);
  }
}

TEST_CASE("scaling report: thin-corner regime with negative r") {
  AsymptoticRegime reg;
  reg.theta = 0.4;
  reg.eta = 1.5;
  const auto rows = scaling_equivalences_report(reg, Partition{2}, Partition{1},
                                                Partition{2}, {30, 60, 120});
  REQUIRE(rows.size() == 15);
  for (const auto& row : rows) {
    CHECK(std::isfinite(row.gap));
  }
  // The geometry only closes when d = p + m; other m are rejected.
  CHECK_THROWS(scaling_equivalences_report(reg, Partition{2}, Partition{1},
                                           Partition{2}, {40}));
}

TEST_CASE("scaling report input validation") {
  AsymptoticRegime reg;
  reg.theta = 0.5;
  reg.eta = 1.0;
  CHECK_THROWS(scaling_equivalences_report(reg, Partition{2, 2}, Partition{1},
                                           Partition{2, 2}, {50}));
  CHECK_THROWS(scaling_equivalences_report(reg, Partition{3}, Partition{1},
                                           Partition{2}, {50}));
  CHECK_THROWS(scaling_equivalences_report(reg, Partition{2}, Partition{2, 1},
                                           Partition{2, 1}, {50}));
  CHECK_THROWS(scaling_equivalences_report(reg, Partition{2, 1}, Partition{1},
                                           Partition{2, 1}, {2}));
}
