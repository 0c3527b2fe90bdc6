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

#ifndef MATJAC_SIMULATE_HPP
#define MATJAC_SIMULATE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace matjac {

// Monte Carlo sampling of J = X X*, where X is the upper-left m x p corner
// of a unitary Brownian motion Y on U(d) started at the identity. One unit
// of t equals one unit of the moment formula's clock: E[tr J_t] relaxes
// like e^{-t} in both.
//
// Increments use the exactly unitary diagonal Pade approximant of
// exp(i dH), so paths stay on the group up to roundoff; a polar correction
// every 64 steps removes the accumulated roundoff drift. Every path is an
// independent deterministic function of (seed, path index), so results do
// not depend on the number of worker threads (set via MATJAC_THREADS).

struct SimConfig {
  int d = 0;
  int p = 0;
  int m = 0;
  double t = 0.0;
  int steps = 1;
  long paths = 1;
  std::uint64_t seed = 1;
};

struct PathEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long paths = 0;
};

// Throws if the corner geometry or sampling sizes are invalid.
void check_sim_config(const SimConfig& cfg);

// One unitary Brownian motion path at time t, driven directly by the seed.
Eigen::MatrixXcd sample_unitary_bm(int d, double t, int steps,
                                   std::uint64_t seed);

// J = B B* from the upper-left m x p corner B of y.
Eigen::MatrixXcd corner_process(const Eigen::MatrixXcd& y, int m, int p);

// max |(Y* Y - I)_{ij}|.
double unitarity_defect(const Eigen::MatrixXcd& y);

// Mean and standard error of tr(J_t^n) over cfg.paths independent paths.
PathEstimate trace_moment_mc(const SimConfig& cfg, int n);

// Several trace powers measured on the same paths.
std::vector<PathEstimate> trace_moments_mc(const SimConfig& cfg,
                                           const std::vector<int>& ns);

// Same, with each step's increment drawn as the sum of `substeps` finer
// increments. Runs with equal steps * substeps and seed share the driving
// noise, which isolates the time-discretization error from the Monte Carlo
// noise when comparing step counts.
std::vector<PathEstimate> trace_moments_mc_substeps(const SimConfig& cfg,
                                                    const std::vector<int>& ns,
                                                    int substeps);

// Independent check through the autonomous eigenvalue dynamics
//   dx_i = sqrt((2/d) x_i (1 - x_i)) dw_i
//        + (1/d) [ (p - d x_i) + sum_{j != i} (x_i(1-x_j) + x_j(1-x_i))
//                                             / (x_i - x_j) ] dt
// integrated by Euler-Maruyama from a spread start near the identity
// spectrum. Requires min(p, d - p) > m - 1/2 (no eigenvalue collisions).
PathEstimate eigen_sde_euler(const SimConfig& cfg, int n);

}  // namespace matjac

#endif  // MATJAC_SIMULATE_HPP
