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

#ifndef MATJAC_SYMJACOBI_HPP
#define MATJAC_SYMJACOBI_HPP

#include <stdexcept>
#include <vector>

#include "matjac/jacobi1d.hpp"
#include "matjac/partitions.hpp"
#include "matjac/rational.hpp"

namespace matjac {

// Multivariate Jacobi polynomials in m variables indexed by a partition tau,
// for the weight W(x) = prod_i x_i^r (1-x_i)^s * V(x)^2 on the ordered
// simplex, V(x) = prod_{i<j} (x_i - x_j). Two normalizations are used: the
// determinantal one built from L2-normalized one-dimensional polynomials
// (orthonormal against W), and the series one U_tau normalized by
// U_tau(0^m) = 1. They are proportional; see proportionality_constant.

// prod_{i<j<=m} (tau_i - tau_j + j - i)(tau_i + tau_j + 2m - i - j + r + s + 1),
// the Vandermonde-type product of the shifted parts tau_i + m - i.
template <class K>
K shifted_vandermonde(const K& r, const K& s, int m, const Partition& tau) {
  K out(1);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      out *= K(tau.part(i) - tau.part(j) + j - i);
      out *= K(tau.part(i) + tau.part(j) + 2 * m - i - j) + r + s + K(1);
    }
  }
  return out;
}

// Hook coefficient C_mu^tau(X) entering the Schur expansion of U_tau,
// written in a frame tau = (n-k-delta, 1^{k-g}), mu = (n-k-gamma, 1^{k-l});
// the mu frame reuses HookFrame with delta -> gamma, g -> l. The value does
// not depend on the frame choice. mu must be nonempty.
template <class K>
K c_coeff(const HookFrame& tf, const HookFrame& mf, const K& X) {
  if (!tf.valid() || !mf.valid() || tf.n != mf.n || tf.k != mf.k ||
      mf.delta < tf.delta || mf.g < tf.g) {
    throw std::invalid_argument("c_coeff: invalid or mismatched hook frames");
  }
  const int n = tf.n, k = tf.k, delta = tf.delta, g = tf.g;
  const int gamma = mf.delta, l = mf.g;
  const int row = n - k - delta;
  const int col = k - g;
  K out = X + K(row * (row - 1) - col * (col + 1)) / K(n - delta - g);
  for (int i = 2; i <= n - k - gamma; ++i) out *= X + K(row + i - 2);
  for (int i = 1; i <= k - l; ++i) out *= X - K(k - g + i);
  return out;
}

template <class K>
K c_coeff(const Partition& tau, const Partition& mu, const K& X) {
  if (mu.empty()) {
    throw std::invalid_argument("c_coeff: requires a nonempty mu");
  }
  if (!is_hook(tau) || !is_hook(mu) || !contains(mu, tau)) {
    throw std::invalid_argument("c_coeff: requires hooks with mu inside tau");
  }
  HookFrame tf{tau.weight(), tau.length() - 1, 0, 0};
  HookFrame mf{tf.n, tf.k, tau.part(1) - mu.part(1), tf.k - (mu.length() - 1)};
  return c_coeff(tf, mf, X);
}

// Coefficient of s_mu in the Schur expansion of U_tau:
//   U_tau(x) = sum_{mu inside tau} u_expansion_coeff(mu) s_mu(x),
// equal to (-1)^{|mu|} binom(tau, mu) C_mu^tau(r+s+2m) /
// ((r+m)_mu s_mu(1^m)) for nonempty mu and to 1 for mu empty.
template <class K>
K u_expansion_coeff(const K& r, const K& s, int m, const Partition& tau,
                    const Partition& mu) {
  if (mu.empty()) return K(1);
  if (mu.length() > m) {
    throw std::invalid_argument("u_expansion_coeff: requires l(mu) <= m");
  }
  const K sign = (mu.weight() % 2 == 0) ? K(1) : K(-1);
  K binom, weyl;
  if constexpr (std::is_floating_point_v<K>) {
    binom = to_double(gen_binomial(tau, mu));
    weyl = to_double(schur_at_ones(mu, m));
  } else {
    binom = gen_binomial(tau, mu);
    weyl = schur_at_ones(mu, m);
  }
  const K x = r + s + K(2 * m);
  const K poch = gen_pochhammer(K(r + K(m)), mu);
  return sign * binom * c_coeff(tau, mu, x) / (poch * weyl);
}

// subhooks for hooks, and the single empty partition for empty tau.
std::vector<Partition> subhooks_or_empty(const Partition& tau);

// U_tau evaluated anywhere, through the Schur expansion. Safe at coincident
// coordinates. lambda must have exactly m entries.
template <class K>
K u_tau_schur(const K& r, const K& s, int m, const Partition& tau,
              const std::vector<K>& lambda) {
  if (static_cast<int>(lambda.size()) != m) {
    throw std::invalid_argument("u_tau_schur: requires |lambda| = m");
  }
  if (tau.length() > m) {
    throw std::invalid_argument("u_tau_schur: requires l(tau) <= m");
  }
  K out(0);
  for (const Partition& mu : subhooks_or_empty(tau)) {
    out += u_expansion_coeff(r, s, m, tau, mu) * schur_eval(mu, lambda);
  }
  return out;
}

// U_tau(1^m) in closed form through the expansion (s_mu(1^m) cancels).
template <class K>
K u_at_ones(const K& r, const K& s, int m, const Partition& tau) {
  if (tau.length() > m) {
    throw std::invalid_argument("u_at_ones: requires l(tau) <= m");
  }
  K out(1);
  const K x = r + s + K(2 * m);
  for (const Partition& mu : subhooks_or_empty(tau)) {
    if (mu.empty()) continue;
    const K sign = (mu.weight() % 2 == 0) ? K(1) : K(-1);
    K binom;
    if constexpr (std::is_floating_point_v<K>) {
      binom = to_double(gen_binomial(tau, mu));
    } else {
      binom = gen_binomial(tau, mu);
    }
    out += sign * binom * c_coeff(tau, mu, x) /
           gen_pochhammer(K(r + K(m)), mu);
  }
  return out;
}

// Determinantal evaluation det[p^_{tau_i+m-i}(x_j)] / V(x) with L2-normalized
// one-dimensional polynomials p^. Orthonormal against W over the ordered
// simplex. Refuses nearly coincident coordinates (minimum gap 1e-8); use the
// closed forms for special points instead.
double p_tau_det(double r, double s, int m, const Partition& tau,
                 const std::vector<double>& x);

// Same determinantal form on [-1,1] with the unnormalized polynomials
// q_n(y) = p_n((1-y)/2).
double q_tau_det(double r, double s, int m, const Partition& tau,
                 const std::vector<double>& y);

// Special value of the [-1,1] normalization at (1, ..., 1).
double q_at_ones(double r, double s, int m, const Partition& tau);
Rat q_at_ones_rat(long r, long s, int m, const Partition& tau);

// Special value of the determinantal normalization at (1, ..., 1), computed
// from q_at_ones with swapped parameters via the mirror symmetry
// q_n^{r,s}(-y) = (-1)^n q_n^{s,r}(y).
double p_at_ones(double r, double s, int m, const Partition& tau);

// Constant c_tau with p_tau_det = c_tau * u_tau_schur; its square is the
// a coefficient of the moment formula and its sign is (-1)^{m(m-1)/2}
// for r, s >= 0.
double proportionality_constant(double r, double s, int m,
                                const Partition& tau);

}  // namespace matjac

#endif  // MATJAC_SYMJACOBI_HPP
