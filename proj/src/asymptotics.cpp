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

#include "matjac/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "matjac/moments.hpp"
#include "matjac/rational.hpp"

namespace matjac {

namespace {

double lg(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error(
        "scaling_equivalences_report: nonpositive Gamma argument");
  }
  return std::lgamma(x);
}

double lnv(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error(
        "scaling_equivalences_report: nonpositive product factor");
  }
  return std::log(x);
}

// Product of hook lengths of the hook partition (a, 1^b).
double hook_length_product(const Partition& alpha) {
  const long a = alpha.part(1);
  const long b = alpha.length() - 1;
  double out = a + b;
  for (long j = 2; j <= a; ++j) out *= a - j + 1;
  for (long i = 2; i <= b + 1; ++i) out *= b - i + 2;
  return out;
}

}  // namespace

int AsymptoticRegime::p(int m) const {
  return static_cast<int>(std::lround(m / eta));
}

int AsymptoticRegime::d(int m) const {
  return static_cast<int>(std::lround(p(m) / theta));
}

void check_regime(const AsymptoticRegime& regime) {
  if (!(regime.theta > 0.0 && regime.theta < 1.0)) {
    throw std::domain_error("check_regime: requires 0 < theta < 1");
  }
  if (!(regime.eta > 0.0)) {
    throw std::domain_error("check_regime: requires eta > 0");
  }
}

double k_over_d_limit(const Partition& tau) {
  return static_cast<double>(tau.weight());
}

double k_over_d_gap(const AsymptoticRegime& regime, const Partition& tau,
                    int m) {
  check_regime(regime);
  if (m < tau.length()) {
    throw std::domain_error("k_over_d_gap: requires m >= l(tau)");
  }
  const double d = regime.d(m);
  const double r = regime.r(m), s = regime.s(m);
  return std::abs(k_eigenvalue(r, s, m, tau) / d - k_over_d_limit(tau));
}

double b_smu_limit(const Partition& mu, const Partition& tau, double theta) {
  if (!(theta > 0.0)) {
    throw std::domain_error("b_smu_limit: requires theta > 0");
  }
  if (mu.empty()) return 1.0;
  const double sign = (mu.weight() % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(theta, -mu.weight()) *
         to_double(gen_binomial(tau, mu));
}

double u_ones_limit(const Partition& tau, double theta) {
  if (!(theta > 0.0)) {
    throw std::domain_error("u_ones_limit: requires theta > 0");
  }
  return std::pow(1.0 - 1.0 / theta, tau.weight());
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::domain_error("laguerre: requires n >= 0");
  double out = 0.0;
  double xpow = 1.0;
  double fact = 1.0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      xpow *= -x;
      fact *= j;
    }
    // binom(n + alpha, n - j) through Gamma functions.
    const double lb = std::lgamma(n + alpha + 1.0) -
                      std::lgamma(alpha + j + 1.0) - std::lgamma(n - j + 1.0);
    out += std::exp(lb) * xpow / fact;
  }
  return out;
}

double free_jacobi_moment_ref(int n, double t) {
  if (n < 1) throw std::domain_error("free_jacobi_moment_ref: requires n >= 1");
  if (!(t >= 0.0)) {
    throw std::domain_error("free_jacobi_moment_ref: requires t >= 0");
  }
  const double four_n = std::pow(4.0, n);
  double out = to_double(rat_binom(2 * n, n)) / four_n;
  for (int k = 1; k <= n; ++k) {
    out += 2.0 / four_n * to_double(rat_binom(2 * n, n - k)) *
           laguerre(k - 1, 1.0, 2.0 * k * t) * std::exp(-k * t) / k;
  }
  return out;
}

std::vector<ScalingRow> scaling_equivalences_report(
    const AsymptoticRegime& regime, const Partition& tau, const Partition& mu,
    const Partition& alpha, const std::vector<int>& m_list) {
  check_regime(regime);
  if (!is_hook(alpha) || !contains(tau, alpha) || !contains(mu, tau)) {
    throw std::invalid_argument(
        "scaling_equivalences_report: requires mu inside tau inside a hook "
        "alpha");
  }
  const int l = alpha.length();
  const double theta = regime.theta, eta = regime.eta;
  const double lim_gamma = std::pow(theta / (1.0 - theta), tau.weight());
  const double lim_cross =
      std::pow(theta, alpha.weight() + mu.weight() - 2.0 * tau.weight());
  const double lim_schur = std::pow(eta * theta, alpha.weight()) /
                           hook_length_product(alpha);
  std::vector<ScalingRow> rows;
  for (int m : m_list) {
    if (m < l + 1) {
      throw std::domain_error(
          "scaling_equivalences_report: requires m > l(alpha)");
    }
    if (regime.s(m) != 0) {
      throw std::domain_error(
          "scaling_equivalences_report: requires s(m) = 0 (d = p + m)");
    }
    const double r = regime.r(m);
    const double d = regime.d(m);

    double lgam = 0.0;
    for (int i = 1; i <= tau.length(); ++i) {
      lgam += lg(r + tau.part(i) + m - i + 1) + lg(m - i + 1.0) -
              lg(tau.part(i) + m - i + 1.0) - lg(r + m - i + 1);
    }
    const double gamma_ratio = std::exp(lgam);

    double bracket = 1.0;
    for (int i = 1; i <= l; ++i) {
      bracket *= (2.0 * (tau.part(i) + m - i) + r + 1) /
                 (alpha.part(i) + mu.part(i) + 2.0 * (m - i) + r + 1);
    }

    double lrect = 0.0;
    for (int i = 1; i <= l; ++i) {
      for (int j = 1; j <= l; ++j) {
        if (i < j) {
          lrect += 2.0 * lnv(tau.part(i) + tau.part(j) + 2.0 * m - i - j + r +
                             1);
        }
        if (i != j) {
          lrect -= lnv(alpha.part(i) + mu.part(j) + 2.0 * m - i - j + r + 1);
        }
      }
    }
    const double rect = std::exp(lrect);

    double lcross = 0.0;
    for (int i = 1; i <= l; ++i) {
      for (int j = l + 1; j <= m; ++j) {
        const double base = 2.0 * m - i - j + r + 1;
        lcross += 2.0 * lnv(base + tau.part(i)) - lnv(base + alpha.part(i)) -
                  lnv(base + mu.part(i));
      }
    }
    const double cross = std::exp(lcross);

    const double schur =
        std::exp(log_schur_at_ones(alpha, m) - alpha.weight() * std::log(d));

    const ScalingRow base_rows[5] = {
        {m, "gamma_ratio", gamma_ratio, lim_gamma, 0.0},
        {m, "bracket_ratio", bracket, 1.0, 0.0},
        {m, "finite_rectangle", rect, 1.0, 0.0},
        {m, "cross_ratio", cross, lim_cross, 0.0},
        {m, "schur_scaling", schur, lim_schur, 0.0},
    };
    for (ScalingRow row : base_rows) {
      row.gap = std::abs(row.finite_value / row.limit_value - 1.0);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace matjac
