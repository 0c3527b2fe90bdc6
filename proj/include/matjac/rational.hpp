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

#ifndef MATJAC_RATIONAL_HPP
#define MATJAC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace matjac {

// Exact rational scalar used whenever the shape parameters are integers.
using Rat = mpq_class;

inline double to_double(const Rat& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

// Canonical form "num" or "num/den" with den > 0.
std::string rat_string(const Rat& x);

Rat rat_factorial(long n);

// Binomial coefficient, 0 outside 0 <= k <= n.
Rat rat_binom(long n, long k);

// x^e for e >= 0.
template <class K>
K int_pow(const K& x, int e) {
  K out(1);
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// Rising factorial (z)_n = z (z+1) ... (z+n-1); empty product for n <= 0.
template <class K>
K rising(const K& z, int n) {
  K out(1);
  for (int j = 0; j < n; ++j) out *= z + K(j);
  return out;
}

}  // namespace matjac

#endif  // MATJAC_RATIONAL_HPP
