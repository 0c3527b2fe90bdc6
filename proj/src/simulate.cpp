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

#include "matjac/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace matjac {

namespace {

using cd = std::complex<double>;

struct Splitmix64 {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

struct Xoshiro256pp {
  std::uint64_t s[4];
  explicit Xoshiro256pp(std::uint64_t seed) {
    Splitmix64 sm{seed};
    for (auto& x : s) x = sm.next();
  }
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t next() {
    const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

// Marsaglia polar method with the second variate cached.
struct GaussPolar {
  Xoshiro256pp rng;
  double cached = 0.0;
  bool has = false;
  explicit GaussPolar(std::uint64_t seed) : rng(seed) {}
  double operator()() {
    if (has) {
      has = false;
      return cached;
    }
    double u, v, q;
    do {
      u = 2.0 * rng.uniform() - 1.0;
      v = 2.0 * rng.uniform() - 1.0;
      q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    const double f = std::sqrt(-2.0 * std::log(q) / q);
    cached = v * f;
    has = true;
    return u * f;
  }
};

std::uint64_t path_seed(std::uint64_t seed, long path) {
  return seed +
         0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(path + 1);
}

inline cd recip(cd z) {
  const double n = z.real() * z.real() + z.imag() * z.imag();
  return cd(z.real() / n, -z.imag() / n);
}

// One-path state for the unitary increment recursion Y <- Y N D^{-1} with
// N = I + A/2 + A^2/12, D = I - A/2 + A^2/12 = N* and A = i dH skew
// Hermitian. N and D commute as polynomials in A, so the rational step is
// exactly unitary in exact arithmetic. DC > 0 fixes the dimension at
// compile time; DC == -1 is the any-dimension fallback.
template <int DC>
struct Engine {
  static constexpr bool kFixed = (DC > 0);
  using Mat = std::conditional_t<kFixed, std::array<cd, kFixed ? DC * DC : 1>,
                                 std::vector<cd>>;

  int dim_;
  Mat y, a, a2, n, dd, c, w1;

  explicit Engine(int dim) : dim_(dim) {
    if constexpr (!kFixed) {
      const std::size_t sz = static_cast<std::size_t>(dim) * dim;
      for (Mat* mp : {&y, &a, &a2, &n, &dd, &c, &w1}) mp->assign(sz, cd());
    }
  }

  int d() const { return kFixed ? DC : dim_; }

  void identity() {
    const int dim = d();
    std::fill(y.begin(), y.end(), cd());
    for (int i = 0; i < dim; ++i) y[i * dim + i] = cd(1, 0);
  }

  static void mul(int dim, const cd* A, const cd* B, cd* C) {
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) C[i * dim + j] = cd(0, 0);
      for (int k = 0; k < dim; ++k) {
        const cd aik = A[i * dim + k];
        for (int j = 0; j < dim; ++j) C[i * dim + j] += aik * B[k * dim + j];
      }
    }
  }

  // Solves X D = C in place of C: LU of D^T with partial pivoting and
  // precomputed reciprocal pivots, then one sweep per row of C.
  static void solve_right(int dim, const cd* D, cd* C, cd* lu) {
    int piv[64];
    cd rinv[64];
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) lu[i * dim + j] = D[j * dim + i];
    for (int k = 0; k < dim; ++k) {
      int p = k;
      double best = std::norm(lu[k * dim + k]);
      for (int i = k + 1; i < dim; ++i) {
        const double v = std::norm(lu[i * dim + k]);
        if (v > best) {
          best = v;
          p = i;
        }
      }
      piv[k] = p;
      if (p != k)
        for (int j = 0; j < dim; ++j) std::swap(lu[k * dim + j], lu[p * dim + j]);
      const cd inv = recip(lu[k * dim + k]);
      rinv[k] = inv;
      for (int i = k + 1; i < dim; ++i) {
        const cd f = lu[i * dim + k] * inv;
        lu[i * dim + k] = f;
        for (int j = k + 1; j < dim; ++j) lu[i * dim + j] -= f * lu[k * dim + j];
      }
    }
    for (int r = 0; r < dim; ++r) {
      cd* x = &C[r * dim];
      for (int k = 0; k < dim; ++k)
        if (piv[k] != k) std::swap(x[k], x[piv[k]]);
      for (int k = 0; k < dim; ++k)
        for (int i = k + 1; i < dim; ++i) x[i] -= lu[i * dim + k] * x[k];
      for (int k = dim - 1; k >= 0; --k) {
        for (int j = k + 1; j < dim; ++j) x[k] -= lu[k * dim + j] * x[j];
        x[k] *= rinv[k];
      }
    }
  }

  // A = i dH accumulated over `substeps` independent fine increments, each
  // Hermitian entry with variance sig^2 (diagonal) or sig^2 split evenly
  // over real and imaginary parts (off-diagonal).
  void sample_a(GaussPolar& g, double sig, int substeps) {
    const int dim = d();
    std::fill(a.begin(), a.end(), cd());
    for (int ss = 0; ss < substeps; ++ss) {
      for (int i = 0; i < dim; ++i) {
        a[i * dim + i] += cd(0, sig * g());
        for (int j = i + 1; j < dim; ++j) {
          const double re = sig * g() * M_SQRT1_2;
          const double im = sig * g() * M_SQRT1_2;
          a[i * dim + j] += cd(-im, re);
          a[j * dim + i] += cd(im, re);
        }
      }
    }
  }

  void step() {
    const int dim = d();
    mul(dim, a.data(), a.data(), a2.data());
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        const cd e = (i == j) ? cd(1, 0) : cd(0, 0);
        const cd half = 0.5 * a[i * dim + j];
        const cd sq = a2[i * dim + j] / 12.0;
        n[i * dim + j] = e + half + sq;
        dd[i * dim + j] = e - half + sq;
      }
    }
    mul(dim, y.data(), n.data(), c.data());
    solve_right(dim, dd.data(), c.data(), w1.data());
    std::swap(y, c);
  }

  // One Newton-Schulz sweep toward the polar factor: Y <- Y (3I - Y*Y)/2.
  void polar() {
    const int dim = d();
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        cd acc(0, 0);
        for (int k = 0; k < dim; ++k) acc += std::conj(y[k * dim + i]) * y[k * dim + j];
        a2[i * dim + j] = acc;
      }
    }
    mul(dim, y.data(), a2.data(), c.data());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = 1.5 * y[i] - 0.5 * c[i];
  }
};

constexpr int kPolarPeriod = 64;

// Evolves one path to time t and leaves the unitary in eng.y.
template <int DC>
void run_path(Engine<DC>& eng, GaussPolar& g, double t, int steps,
              int substeps) {
  const double dt_fine =
      t / (static_cast<double>(steps) * static_cast<double>(substeps));
  const double sig = std::sqrt(dt_fine / eng.d());
  eng.identity();
  for (int s = 0; s < steps; ++s) {
    eng.sample_a(g, sig, substeps);
    eng.step();
    if ((s + 1) % kPolarPeriod == 0) eng.polar();
  }
  eng.polar();
}

// Trace powers of J = B B* from the m x p corner B of the d x d unitary.
void corner_traces(const cd* y, int d, int m, int p,
                   const std::vector<int>& ns, std::vector<cd>& j,
                   std::vector<cd>& pw, std::vector<cd>& tmp, double* out) {
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      cd acc(0, 0);
      for (int c = 0; c < p; ++c) acc += y[a * d + c] * std::conj(y[b * d + c]);
      j[a * m + b] = acc;
    }
  }
  const int max_n = *std::max_element(ns.begin(), ns.end());
  pw = j;
  std::vector<double> traces(max_n + 1, 0.0);
  for (int n = 1; n <= max_n; ++n) {
    double tr = 0.0;
    for (int a = 0; a < m; ++a) tr += pw[a * m + a].real();
    traces[n] = tr;
    if (n < max_n) {
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          cd acc(0, 0);
          for (int k = 0; k < m; ++k) acc += pw[a * m + k] * j[k * m + b];
          tmp[a * m + b] = acc;
        }
      }
      std::swap(pw, tmp);
    }
  }
  for (std::size_t i = 0; i < ns.size(); ++i) out[i] = traces[ns[i]];
}

template <int DC>
void corner_chunk(const SimConfig& cfg, const std::vector<int>& ns,
                  int substeps, long p0, long p1,
                  std::vector<std::vector<double>>* values) {
  Engine<DC> eng(cfg.d);
  std::vector<cd> j(cfg.m * cfg.m), pw(cfg.m * cfg.m), tmp(cfg.m * cfg.m);
  std::vector<double> out(ns.size());
  for (long path = p0; path < p1; ++path) {
    GaussPolar g(path_seed(cfg.seed, path));
    run_path(eng, g, cfg.t, cfg.steps, substeps);
    corner_traces(eng.y.data(), cfg.d, cfg.m, cfg.p, ns, j, pw, tmp,
                  out.data());
    for (std::size_t i = 0; i < ns.size(); ++i) (*values)[i][path] = out[i];
  }
}

using ChunkFn = void (*)(const SimConfig&, const std::vector<int>&, int, long,
                         long, std::vector<std::vector<double>>*);

ChunkFn pick_chunk_fn(int d) {
  switch (d) {
    case 2: return &corner_chunk<2>;
    case 3: return &corner_chunk<3>;
    case 4: return &corner_chunk<4>;
    case 5: return &corner_chunk<5>;
    case 6: return &corner_chunk<6>;
    case 7: return &corner_chunk<7>;
    case 8: return &corner_chunk<8>;
    case 9: return &corner_chunk<9>;
    case 10: return &corner_chunk<10>;
    case 11: return &corner_chunk<11>;
    case 12: return &corner_chunk<12>;
    default: return &corner_chunk<-1>;
  }
}

double pairwise_sum(const double* x, long n) {
  if (n <= 8) {
    double s = 0.0;
    for (long i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const long h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

double pairwise_sq_dev(const double* x, long n, double mean) {
  if (n <= 8) {
    double s = 0.0;
    for (long i = 0; i < n; ++i) s += (x[i] - mean) * (x[i] - mean);
    return s;
  }
  const long h = n / 2;
  return pairwise_sq_dev(x, h, mean) + pairwise_sq_dev(x + h, n - h, mean);
}

PathEstimate reduce_values(const std::vector<double>& v) {
  PathEstimate est;
  est.paths = static_cast<long>(v.size());
  est.mean = pairwise_sum(v.data(), est.paths) / est.paths;
  if (est.paths > 1) {
    const double ssq = pairwise_sq_dev(v.data(), est.paths, est.mean);
    est.std_error = std::sqrt(ssq / (static_cast<double>(est.paths) *
                                     (est.paths - 1)));
  }
  return est;
}

int thread_count() {
  const char* env = std::getenv("MATJAC_THREADS");
  if (env == nullptr) return 1;
  const int t = std::atoi(env);
  return t < 1 ? 1 : t;
}

}  // namespace

void check_sim_config(const SimConfig& cfg) {
  if (cfg.d < 2 || cfg.d > 63) {
    throw std::domain_error("check_sim_config: requires 2 <= d <= 63");
  }
  if (cfg.p < 1 || cfg.p > cfg.d) {
    throw std::domain_error("check_sim_config: requires 1 <= p <= d");
  }
  if (cfg.m < 1 || cfg.m > cfg.d) {
    throw std::domain_error("check_sim_config: requires 1 <= m <= d");
  }
  if (!(cfg.t >= 0.0)) {
    throw std::domain_error("check_sim_config: requires t >= 0");
  }
  if (cfg.steps < 1) {
    throw std::domain_error("check_sim_config: requires steps >= 1");
  }
  if (cfg.paths < 1) {
    throw std::domain_error("check_sim_config: requires paths >= 1");
  }
}

Eigen::MatrixXcd sample_unitary_bm(int d, double t, int steps,
                                   std::uint64_t seed) {
  SimConfig probe;
  probe.d = d;
  probe.p = 1;
  probe.m = 1;
  probe.t = t;
  probe.steps = steps;
  check_sim_config(probe);
  Engine<-1> eng(d);
  GaussPolar g(seed);
  run_path(eng, g, t, steps, 1);
  Eigen::MatrixXcd y(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) y(i, j) = eng.y[i * d + j];
  return y;
}

Eigen::MatrixXcd corner_process(const Eigen::MatrixXcd& y, int m, int p) {
  if (m < 1 || p < 1 || m > y.rows() || p > y.cols()) {
    throw std::domain_error(
        "corner_process: requires 1 <= m <= rows and 1 <= p <= cols");
  }
  const Eigen::MatrixXcd b = y.topLeftCorner(m, p);
  return b * b.adjoint();
}

double unitarity_defect(const Eigen::MatrixXcd& y) {
  const Eigen::MatrixXcd r =
      y.adjoint() * y -
      Eigen::MatrixXcd::Identity(y.rows(), y.cols());
  return r.cwiseAbs().maxCoeff();
}

std::vector<PathEstimate> trace_moments_mc_substeps(const SimConfig& cfg,
                                                    const std::vector<int>& ns,
                                                    int substeps) {
  check_sim_config(cfg);
  if (ns.empty()) {
    throw std::invalid_argument(
        "trace_moments_mc: requires at least one power");
  }
  for (int n : ns) {
    if (n < 1) {
      throw std::domain_error("trace_moments_mc: requires n >= 1");
    }
  }
  if (substeps < 1) {
    throw std::domain_error("trace_moments_mc: requires substeps >= 1");
  }
  std::vector<std::vector<double>> values(
      ns.size(), std::vector<double>(cfg.paths, 0.0));
  const ChunkFn chunk = pick_chunk_fn(cfg.d);
  const int workers =
      static_cast<int>(std::min<long>(thread_count(), cfg.paths));
  if (workers <= 1) {
    chunk(cfg, ns, substeps, 0, cfg.paths, &values);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const long p0 = cfg.paths * w / workers;
      const long p1 = cfg.paths * (w + 1) / workers;
      pool.emplace_back(chunk, std::cref(cfg), std::cref(ns), substeps, p0, p1,
                        &values);
    }
    for (auto& th : pool) th.join();
  }
  std::vector<PathEstimate> out;
  out.reserve(ns.size());
  for (const auto& v : values) out.push_back(reduce_values(v));
  return out;
}

std::vector<PathEstimate> trace_moments_mc(const SimConfig& cfg,
                                           const std::vector<int>& ns) {
  return trace_moments_mc_substeps(cfg, ns, 1);
}

PathEstimate trace_moment_mc(const SimConfig& cfg, int n) {
  return trace_moments_mc(cfg, std::vector<int>{n})[0];
}

PathEstimate eigen_sde_euler(const SimConfig& cfg, int n) {
  check_sim_config(cfg);
  if (n < 1) throw std::domain_error("eigen_sde_euler: requires n >= 1");
  const int q = cfg.d - cfg.p;
  if (!(std::min(cfg.p, q) > cfg.m - 0.5)) {
    throw std::domain_error(
        "eigen_sde_euler: requires min(p, d - p) > m - 1/2");
  }
  const int m = cfg.m;
  const double d = cfg.d;
  const double dt = cfg.t / cfg.steps;
  constexpr double kEdge = 1e-12;
  std::vector<double> values(cfg.paths, 0.0);
  std::vector<double> x(m), drift(m);
  for (long path = 0; path < cfg.paths; ++path) {
    GaussPolar g(path_seed(cfg.seed, path));
    for (int i = 0; i < m; ++i) x[i] = 1.0 - 1e-4 * (i + 1);
    for (int s = 0; s < cfg.steps; ++s) {
      for (int i = 0; i < m; ++i) {
        double inter = 0.0;
        for (int j = 0; j < m; ++j) {
          if (j == i) continue;
          inter += (x[i] * (1.0 - x[j]) + x[j] * (1.0 - x[i])) / (x[i] - x[j]);
        }
        drift[i] = (cfg.p - d * x[i] + inter) / d;
      }
      for (int i = 0; i < m; ++i) {
        const double var = 2.0 * x[i] * (1.0 - x[i]) * dt / d;
        const double vol = std::sqrt(std::max(0.0, var));
        x[i] += drift[i] * dt + vol * g();
        x[i] = std::min(1.0 - kEdge, std::max(kEdge, x[i]));
      }
      std::sort(x.begin(), x.end(), std::greater<double>());
      // Distinct gaps keep the interaction term finite; pushing upward from
      // the floor can overshoot 1 by at most m * kEdge, absorbed above.
      for (int i = m - 2; i >= 0; --i) {
        if (x[i] < x[i + 1] + kEdge) x[i] = x[i + 1] + kEdge;
      }
    }
    double sum = 0.0;
    for (int i = 0; i < m; ++i) sum += std::pow(x[i], n);
    values[path] = sum;
  }
  return reduce_values(values);
}

}  // namespace matjac
