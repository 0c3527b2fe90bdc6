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

#ifndef MATJAC_PARTITIONS_HPP
#define MATJAC_PARTITIONS_HPP

#include <initializer_list>
#include <type_traits>
#include <vector>

#include "matjac/linalg.hpp"
#include "matjac/rational.hpp"

namespace matjac {

// Integer partition: weakly decreasing positive parts. Trailing zeros are
// stripped on construction, so equality of stored parts is equality of
// partitions. part(i) is 1-based and returns 0 beyond the length, matching
// the usual convention mu_i = 0 for i > l(mu).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

// True iff mu_i <= tau_i for all i (mu fits inside tau).
bool contains(const Partition& mu, const Partition& tau);

// A hook is (a, 1^b) with a >= 1. The empty partition is not a hook.
bool is_hook(const Partition& p);

// The hooks (n-k, 1^k) of weight n, for k = 0, ..., n-1. These carry the
// expansion of the n-th power sum: sum_i x_i^n = sum_k (-1)^k s_{(n-k,1^k)}.
std::vector<Partition> hooks_alpha(int n);

// All partitions contained in the hook tau (they are hooks or empty),
// ordered by weight, then reverse-lexicographically. Includes the empty
// partition and tau itself.
std::vector<Partition> subhooks(const Partition& tau);

// All partitions of the given weight with at most max_length parts,
// reverse-lexicographic order. Weight 0 yields the empty partition.
std::vector<Partition> partitions_of_weight(int weight, int max_length);

// Hook written in a frame: shape (n-k-delta, 1^{k-g}) with
// 0 <= delta <= n-k-1 and 0 <= g <= k. The same hook admits several frames;
// quantities defined through frames do not depend on the choice.
struct HookFrame {
  int n = 0;
  int k = 0;
  int delta = 0;
  int g = 0;

  bool valid() const {
    return n >= 1 && k >= 0 && k <= n - 1 && delta >= 0 &&
           delta <= n - k - 1 && g >= 0 && g <= k;
  }
  Partition shape() const;
};

// Generalized Pochhammer symbol (z)_mu = prod_i (z - i + 1)_{mu_i}.
template <class K>
K gen_pochhammer(const K& z, const Partition& mu) {
  K out(1);
  for (int i = 1; i <= mu.length(); ++i) {
    out *= rising(K(z - K(i - 1)), mu.part(i));
  }
  return out;
}

// Generalized binomial coefficient binom(tau, mu) for hooks mu inside tau.
// binom(tau, empty) = 1, binom(tau, tau) = 1, and binom(tau, mu) = 0 when
// mu does not fit inside tau. Defined through any hook frame; the value is
// frame-independent.
Rat gen_binomial(const Partition& tau, const Partition& mu);

// Frame form: both frames must share (n, k), and the mu frame's (delta, g)
// must dominate the tau frame's component-wise.
Rat gen_binomial(const HookFrame& tau_frame, const HookFrame& mu_frame);

// Schur polynomial at (1, ..., 1) (m ones): the Weyl dimension product
// prod_{i<j} (mu_i - mu_j + j - i) / (j - i). Zero when l(mu) > m.
Rat schur_at_ones(const Partition& mu, int m);

// log of schur_at_ones for large m (every factor is positive).
double log_schur_at_ones(const Partition& mu, int m);

// Schur polynomial evaluated at an arbitrary point, safe at coincident
// coordinates: complete homogeneous sums via Newton's identities from the
// power sums of lambda, then the Jacobi-Trudi determinant.
template <class K>
K schur_eval(const Partition& mu, const std::vector<K>& lambda) {
  const int m = static_cast<int>(lambda.size());
  const int l = mu.length();
  if (l > m) return K(0);
  if (l == 0) return K(1);

  const int maxdeg = mu.part(1) + l - 1;
  std::vector<K> power(maxdeg + 1, K(0));
  for (int j = 1; j <= maxdeg; ++j) {
    K sum(0);
    for (const K& x : lambda) sum += int_pow(x, j);
    power[j] = sum;
  }
  std::vector<K> h(maxdeg + 1, K(0));
  h[0] = K(1);
  for (int j = 1; j <= maxdeg; ++j) {
    K sum(0);
    for (int i = 1; i <= j; ++i) sum += power[i] * h[j - i];
    h[j] = sum / K(j);
  }

  SquareMatrix<K> jt(l, std::vector<K>(l, K(0)));
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= l; ++j) {
      const int deg = mu.part(i) - i + j;
      if (deg >= 0) jt[i - 1][j - 1] = h[deg];
    }
  }
  if constexpr (std::is_floating_point_v<K>) {
    return det_pivoted(jt);
  } else {
    return det_fraction_free(jt);
  }
}

}  // namespace matjac

#endif  // MATJAC_PARTITIONS_HPP
