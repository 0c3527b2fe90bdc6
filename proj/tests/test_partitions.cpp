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
#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "matjac/partitions.hpp"
#include "matjac/rational.hpp"

using namespace matjac;

TEST_CASE("partition accessors and ordering") {
  const Partition p{3, 1, 1};
  CHECK(p.length() == 3);
  CHECK(p.weight() == 5);
  CHECK(p.part(1) == 3);
  CHECK(p.part(2) == 1);
  CHECK(p.part(4) == 0);
  CHECK(Partition{}.empty());
  CHECK(Partition{}.weight() == 0);
  CHECK(Partition{1} < Partition{2});
  CHECK(Partition{2, 1} == Partition(std::vector<int>{2, 1}));
}

TEST_CASE("containment is componentwise") {
  CHECK(contains(Partition{}, Partition{2, 1}));
  CHECK(contains(Partition{1}, Partition{2, 1}));
  CHECK(contains(Partition{2, 1}, Partition{2, 1}));
  CHECK_FALSE(contains(Partition{3}, Partition{2, 1}));
  CHECK_FALSE(contains(Partition{1, 1, 1}, Partition{2, 1}));
  CHECK_FALSE(contains(Partition{2, 2}, Partition{3, 1}));
}

TEST_CASE("hook recognition") {
  CHECK_FALSE(is_hook(Partition{}));
  CHECK(is_hook(Partition{4}));
  CHECK(is_hook(Partition{1, 1, 1}));
  CHECK(is_hook(Partition{3, 1, 1}));
  CHECK_FALSE(is_hook(Partition{2, 2}));
  CHECK_FALSE(is_hook(Partition{3, 2, 1}));
}

TEST_CASE("hooks of a given weight, widest first") {
  CHECK(hooks_alpha(1) == std::vector<Partition>{Partition{1}});
  CHECK(hooks_alpha(3) == std::vector<Partition>{Partition{3}, Partition{2, 1},
                                                 Partition{1, 1, 1}});
  const auto h5 = hooks_alpha(5);
  REQUIRE(h5.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(h5[k].part(1) == 5 - k);
    CHECK(h5[k].length() == k + 1);
    CHECK(h5[k].weight() == 5);
    CHECK(is_hook(h5[k]));
  }
}

TEST_CASE("subhooks agree with a brute-force enumeration") {
  for (const Partition& tau :
       {Partition{}, Partition{1}, Partition{4}, Partition{1, 1, 1},
        Partition{3, 1}, Partition{5, 1, 1, 1}, Partition{2, 1, 1, 1, 1, 1}}) {
    std::set<Partition> brute;
    for (int w = 0; w <= tau.weight(); ++w) {
      for (const Partition& mu : partitions_of_weight(w, tau.length() + 1)) {
        if ((mu.empty() || is_hook(mu)) && contains(mu, tau)) {
          brute.insert(mu);
        }
      }
    }
    const auto listed = subhooks(tau);
    const std::set<Partition> got(listed.begin(), listed.end());
    CHECK(got == brute);
    CHECK(listed.size() == got.size());  // no duplicates
    REQUIRE_FALSE(listed.empty());
    CHECK(listed.front() == Partition{});  // empty shape first
  }
}

TEST_CASE("partitions_of_weight counts and shapes") {
  CHECK(partitions_of_weight(0, 3) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of_weight(5, 5).size() == 7);
  CHECK(partitions_of_weight(4, 2).size() == 3);
  for (const Partition& p : partitions_of_weight(6, 3)) {
    CHECK(p.weight() == 6);
    CHECK(p.length() <= 3);
  }
}

TEST_CASE("generalized binomial coefficients, frozen values") {
  CHECK(gen_binomial(Partition{2, 1}, Partition{}) == Rat(1));
  CHECK(gen_binomial(Partition{2, 1}, Partition{1}) == Rat(3));
  CHECK(gen_binomial(Partition{2, 1}, Partition{2}) == Rat(3) / Rat(2));
  CHECK(gen_binomial(Partition{2, 1}, Partition{1, 1}) == Rat(3) / Rat(2));
  CHECK(gen_binomial(Partition{2, 1}, Partition{2, 1}) == Rat(1));
  // binom(tau, (1)) equals the weight of tau.
  for (const Partition& tau :
       {Partition{3}, Partition{2, 1}, Partition{1, 1, 1, 1},
        Partition{4, 1, 1}}) {
    CHECK(gen_binomial(tau, Partition{1}) == Rat(tau.weight()));
  }
}

TEST_CASE("generalized binomial coefficients are frame independent") {
  // (2,1), mu = (1): canonical frame n=3, k=1 versus padded frame n=4, k=2.
  const Rat canonical = gen_binomial(Partition{2, 1}, Partition{1});
  const Rat padded = gen_binomial(HookFrame{4, 2, 0, 1}, HookFrame{4, 2, 1, 2});
  CHECK(padded == canonical);
  // (2), mu = (2): canonical n=2, k=0 versus n=3, k=1.
  const Rat canonical2 = gen_binomial(Partition{2}, Partition{2});
  const Rat padded2 = gen_binomial(HookFrame{3, 1, 0, 1}, HookFrame{3, 1, 0, 1});
  CHECK(padded2 == canonical2);
}

TEST_CASE("binomial expansion of a shifted Schur function") {
  std::mt19937 rng(20260816);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (int m = 1; m <= 5; ++m) {
    for (int w = 1; w <= 4; ++w) {
      for (const Partition& tau : hooks_alpha(w)) {
        if (tau.length() > m) continue;
        const double stau1 = to_double(schur_at_ones(tau, m));
        for (int trial = 0; trial < 20; ++trial) {
          std::vector<double> x(m), xp1(m);
          for (int i = 0; i < m; ++i) {
            x[i] = unif(rng);
            xp1[i] = 1.0 + x[i];
          }
          const double lhs = schur_eval(tau, xp1) / stau1;
          double rhs = 0.0;
          for (const Partition& mu : subhooks(tau)) {
            rhs += to_double(gen_binomial(tau, mu)) * schur_eval(mu, x) /
                   to_double(schur_at_ones(mu, m));
          }
          CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
      }
    }
  }
}

TEST_CASE("power sums expand over hooks with alternating signs") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= m; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> x(m);
        for (double& v : x) v = unif(rng);
        double lhs = 0.0;
        for (double v : x) lhs += std::pow(v, n);
        double rhs = 0.0;
        const auto alphas = hooks_alpha(n);
        for (int k = 0; k < n; ++k) {
          const double sign = (k % 2 == 0) ? 1.0 : -1.0;
          rhs += sign * schur_eval(alphas[k], x);
        }
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
      }
    }
  }
}

TEST_CASE("schur_eval at all-ones matches the closed form exactly") {
  for (int m = 2; m <= 4; ++m) {
    const std::vector<Rat> ones(m, Rat(1));
    for (int w = 0; w <= 6; ++w) {
      for (const Partition& mu : partitions_of_weight(w, m)) {
        CHECK(schur_eval(mu, ones) == schur_at_ones(mu, m));
      }
    }
  }
}

TEST_CASE("schur values at ones, frozen examples") {
  CHECK(schur_at_ones(Partition{}, 3) == Rat(1));
  CHECK(schur_at_ones(Partition{1}, 3) == Rat(3));
  CHECK(schur_at_ones(Partition{2, 1}, 3) == Rat(8));
  CHECK(schur_at_ones(Partition{3, 2, 1}, 3) == Rat(8));
  CHECK(schur_at_ones(Partition{1, 1}, 2) == Rat(1));
  CHECK(schur_at_ones(Partition{2}, 2) == Rat(3));
  // Length above m gives zero.
  CHECK(schur_at_ones(Partition{1, 1, 1}, 2) == Rat(0));
  // log variant agrees where defined.
  CHECK(std::abs(log_schur_at_ones(Partition{2, 1}, 3) - std::log(8.0)) <
        1e-14);
}

TEST_CASE("generalized Pochhammer products") {
  CHECK(gen_pochhammer(Rat(3), Partition{2}) == Rat(12));
  CHECK(gen_pochhammer(Rat(3), Partition{1, 1}) == Rat(6));
  CHECK(gen_pochhammer(Rat(3), Partition{2, 1}) == Rat(24));
  const double got = gen_pochhammer(2.5, Partition{2, 1});
  CHECK(std::abs(got - 2.5 * 3.5 * 1.5) < 1e-14);
}

TEST_CASE("hook frames recover their shape") {
  CHECK(HookFrame{3, 1, 0, 0}.shape() == Partition{2, 1});
  CHECK(HookFrame{4, 2, 1, 1}.shape() == Partition{1, 1});
  CHECK(HookFrame{5, 0, 0, 0}.shape() == Partition{5});
}
