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

#include "matjac/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace matjac {

namespace {

void validate_parts(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) {
      throw std::invalid_argument("Partition: parts must be nonnegative");
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
}

std::vector<int> strip_zeros(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  validate_parts(parts);
  parts_ = strip_zeros(std::move(parts));
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool contains(const Partition& mu, const Partition& tau) {
  if (mu.length() > tau.length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > tau.part(i)) return false;
  }
  return true;
}

bool is_hook(const Partition& p) {
  return p.length() >= 1 && p.part(2) <= 1;
}

std::vector<Partition> hooks_alpha(int n) {
  if (n < 1) throw std::invalid_argument("hooks_alpha: requires n >= 1");
  std::vector<Partition> out;
  out.reserve(n);
  for (int k = 0; k <= n - 1; ++k) {
    std::vector<int> parts(k + 1, 1);
    parts[0] = n - k;
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<Partition> subhooks(const Partition& tau) {
  if (tau.empty()) return {Partition{}};
  if (!is_hook(tau)) {
    throw std::invalid_argument("subhooks: requires a hook partition");
  }
  const int a = tau.part(1);
  const int b = tau.length() - 1;
  std::vector<Partition> out;
  out.reserve(static_cast<std::size_t>(a) * (b + 1) + 1);
  out.emplace_back();
  for (int w = 1; w <= a + b; ++w) {
    // Within a weight, larger first part comes first.
    for (int c = std::min(a, w); c >= 1; --c) {
      const int e = w - c;
      if (e > b) continue;
      std::vector<int> parts(e + 1, 1);
      parts[0] = c;
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

namespace {

void emit_partitions(int remaining, int max_part, int max_len,
                     std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (max_len == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    emit_partitions(remaining - part, part, max_len - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of_weight(int weight, int max_length) {
  if (weight < 0 || max_length < 0) {
    throw std::invalid_argument("partitions_of_weight: negative argument");
  }
  std::vector<Partition> out;
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> acc;
  emit_partitions(weight, weight, max_length, acc, out);
  return out;
}

Partition HookFrame::shape() const {
  if (!valid()) throw std::invalid_argument("HookFrame: invalid frame");
  std::vector<int> parts(k - g + 1, 1);
  parts[0] = n - k - delta;
  return Partition(parts);
}

Rat gen_binomial(const HookFrame& tf, const HookFrame& mf) {
  if (!tf.valid() || !mf.valid()) {
    throw std::invalid_argument("gen_binomial: invalid hook frame");
  }
  if (tf.n != mf.n || tf.k != mf.k) {
    throw std::invalid_argument("gen_binomial: frames must share (n, k)");
  }
  const long n = tf.n, k = tf.k, delta = tf.delta, g = tf.g;
  const long gamma = mf.delta, l = mf.g;
  if (gamma < delta || l < g) {
    throw std::invalid_argument(
        "gen_binomial: inner frame must dominate the outer frame");
  }
  const Rat c1 = rat_binom(n - k - delta - 1, gamma - delta);
  const Rat c2 = rat_binom(k - g, l - g);
  const Rat num =
      Rat((n - delta - l) * (n - g - gamma) - (gamma - delta) * (l - g));
  const Rat den = Rat((n - gamma - l) * (n - gamma - l));
  return c1 * c2 * num / den;
}

Rat gen_binomial(const Partition& tau, const Partition& mu) {
  if (mu.empty()) return Rat(1);
  if (!contains(mu, tau)) return Rat(0);
  if (!is_hook(tau) || !is_hook(mu)) {
    throw std::invalid_argument("gen_binomial: requires hook partitions");
  }
  // Canonical frame: delta = g = 0, so n = |tau| and k = l(tau) - 1.
  HookFrame tf{tau.weight(), tau.length() - 1, 0, 0};
  HookFrame mf{tf.n, tf.k, tau.part(1) - mu.part(1),
               tf.k - (mu.length() - 1)};
  return gen_binomial(tf, mf);
}

Rat schur_at_ones(const Partition& mu, int m) {
  if (m < 0) throw std::invalid_argument("schur_at_ones: requires m >= 0");
  if (mu.length() > m) return Rat(0);
  // Pairs with both rows beyond l(mu) contribute 1.
  Rat out(1);
  for (int i = 1; i <= mu.length(); ++i) {
    for (int j = i + 1; j <= m; ++j) {
      out *= Rat(mu.part(i) - mu.part(j) + j - i);
      out /= Rat(j - i);
    }
  }
  return out;
}

double log_schur_at_ones(const Partition& mu, int m) {
  if (mu.length() > m) {
    throw std::domain_error("log_schur_at_ones: zero value, log undefined");
  }
  double out = 0.0;
  for (int i = 1; i <= mu.length(); ++i) {
    for (int j = i + 1; j <= m; ++j) {
      out += std::log(static_cast<double>(mu.part(i) - mu.part(j) + j - i)) -
             std::log(static_cast<double>(j - i));
    }
  }
  return out;
}

}  // namespace matjac
