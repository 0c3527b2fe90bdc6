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

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matjac/asymptotics.hpp"
#include "matjac/moments.hpp"
#include "matjac/partitions.hpp"
#include "matjac/rational.hpp"
#include "matjac/serialize.hpp"
#include "matjac/simulate.hpp"

namespace {

using matjac::Json;

// Corner geometry given either as (r, s) or as (p, d) with p = r + m and
// d = r + s + 2m. Giving both only works when they agree.
struct ModelParams {
  int m = 1;
  double r = 0.0;
  double s = 0.0;
  int p = 0;
  int d = 0;
  CLI::Option* opt_r = nullptr;
  CLI::Option* opt_s = nullptr;
  CLI::Option* opt_p = nullptr;
  CLI::Option* opt_d = nullptr;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--m", m, "matrix size m")->required();
    opt_r = cmd->add_option("--r", r, "first weight exponent, p - m");
    opt_s = cmd->add_option("--s", s, "second weight exponent, d - p - m");
    opt_p = cmd->add_option("--p", p, "corner width p");
    opt_d = cmd->add_option("--d", d, "unitary group dimension d");
  }

  void resolve() {
    const bool has_pd = opt_p->count() > 0 || opt_d->count() > 0;
    const bool has_rs = opt_r->count() > 0 || opt_s->count() > 0;
    if (!has_pd) return;
    if (opt_p->count() == 0 || opt_d->count() == 0) {
      throw std::domain_error(
          "model parameters: --p and --d must be given together");
    }
    const double r2 = p - m;
    const double s2 = d - p - m;
    if (has_rs && (r2 != r || s2 != s)) {
      throw std::domain_error(
          "model parameters: (--p, --d) conflicts with (--r, --s)");
    }
    r = r2;
    s = s2;
  }
};

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(std::stoi(item));
  }
  return parts;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

struct Sweep {
  double t0 = 0.0, t1 = 0.0;
  int count = 0;
};

Sweep parse_sweep(const std::string& text) {
  Sweep sw;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &sw.t0, &sw.t1, &sw.count,
                  &extra) != 3 ||
      sw.count < 2 || !(sw.t1 > sw.t0) || !(sw.t0 >= 0.0)) {
    throw std::domain_error(
        "--sweep: requires the form t0:t1:count with 0 <= t0 < t1 and "
        "count >= 2");
  }
  return sw;
}

void load_config(const std::string& path, matjac::SimConfig* cfg) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("--config: cannot open " + path);
  }
  Json j = Json::parse(in);
  j.get_to(*cfg);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void run_compute(const ModelParams& mp, int n, double t, bool has_sweep,
                 const Sweep& sw) {
  if (has_sweep) {
    const double stat = matjac::stationary_moment(mp.r, mp.s, mp.m, n);
    std::printf("t,n,value,stationary_gap\n");
    for (int i = 0; i < sw.count; ++i) {
      const double ti = sw.t0 + (sw.t1 - sw.t0) * i / (sw.count - 1);
      const auto res = matjac::expected_trace(mp.r, mp.s, mp.m, n, ti);
      std::printf("%.17g,%d,%.17g,%.17g\n", ti, n, res.value,
                  std::abs(res.value - stat));
    }
    return;
  }
  const auto res = matjac::expected_trace(mp.r, mp.s, mp.m, n, t);
  Json out{{"m", mp.m}, {"r", mp.r}, {"s", mp.s}, {"result", res}};
  print_json(out);
}

void run_stationary(const ModelParams& mp, int n) {
  Json out{{"m", mp.m},
           {"r", mp.r},
           {"s", mp.s},
           {"n", n},
           {"value", matjac::stationary_moment(mp.r, mp.s, mp.m, n)}};
  if (mp.r >= 0 && mp.s >= 0 && std::floor(mp.r) == mp.r &&
      std::floor(mp.s) == mp.s) {
    out["value_exact"] = matjac::rat_string(matjac::stationary_moment_rat(
        static_cast<long>(mp.r), static_cast<long>(mp.s), mp.m, n));
  }
  print_json(out);
}

void run_simulate(const matjac::SimConfig& cfg, int n, bool sde) {
  const matjac::PathEstimate est = sde ? matjac::eigen_sde_euler(cfg, n)
                                       : matjac::trace_moment_mc(cfg, n);
  Json out{{"d", cfg.d},     {"p", cfg.p},         {"m", cfg.m},
           {"n", n},         {"t", cfg.t},         {"steps", cfg.steps},
           {"seed", cfg.seed}, {"estimate", est}};
  print_json(out);
}

void run_compare(const matjac::SimConfig& cfg, int n) {
  const double r = cfg.p - cfg.m;
  const double s = cfg.d - cfg.p - cfg.m;
  if (r < 0 || s < 0) {
    throw std::domain_error(
        "compare: requires min(p, d - p) >= m so that r, s >= 0");
  }
  const auto res = matjac::expected_trace(r, s, cfg.m, n, cfg.t);
  const auto est = matjac::trace_moment_mc(cfg, n);
  const double z = est.std_error > 0.0
                       ? std::abs(res.value - est.mean) / est.std_error
                       : INFINITY;
  Json out{{"d", cfg.d},         {"p", cfg.p},   {"m", cfg.m},
           {"n", n},             {"t", cfg.t},   {"formula", res.value},
           {"mc", est},          {"z", z}};
  print_json(out);
}

void run_density(const ModelParams& mp, const std::string& lambda_text,
                 double t, double eps) {
  const std::vector<double> lambda = parse_doubles(lambda_text);
  const auto ev = matjac::density_eval(mp.r, mp.s, mp.m, lambda, t, eps);
  Json out{{"m", mp.m},
           {"r", mp.r},
           {"s", mp.s},
           {"t", t},
           {"lambda", lambda},
           {"value", ev.value},
           {"truncation_weight", ev.truncation_weight},
           {"tail_estimate", ev.tail_estimate}};
  print_json(out);
}

void run_asymptotics(double theta, double eta, const std::string& mlist_text,
                     const std::string& tau_text, const std::string& mu_text,
                     const std::string& alpha_text) {
  matjac::AsymptoticRegime regime;
  regime.theta = theta;
  regime.eta = eta;
  const matjac::Partition tau(parse_parts(tau_text));
  const matjac::Partition mu(parse_parts(mu_text));
  const matjac::Partition alpha(parse_parts(alpha_text));
  const std::vector<int> mlist = parse_parts(mlist_text);
  if (mlist.empty()) {
    throw std::domain_error("--mlist: requires at least one value of m");
  }
  const auto rows =
      matjac::scaling_equivalences_report(regime, tau, mu, alpha, mlist);
  std::printf("m,quantity,finite_value,limit_value,gap\n");
  for (const auto& row : rows) {
    std::printf("%d,%s,%.17g,%.17g,%.17g\n", row.m, row.quantity.c_str(),
                row.finite_value, row.limit_value, row.gap);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Trace moments, spectral densities and Monte Carlo checks for the "
      "matrix Jacobi process built from corners of unitary Brownian motion"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand(
      "compute", "closed-form E[tr(J_t^n)] with its coefficient ledger");
  ModelParams compute_mp;
  compute_mp.add_to(compute);
  int compute_n = 1;
  double compute_t = 1.0;
  std::string sweep_text;
  compute->add_option("--n", compute_n, "trace power n")->required();
  auto* opt_t = compute->add_option("--t", compute_t, "time t");
  auto* opt_sweep = compute->add_option(
      "--sweep", sweep_text, "CSV over a time grid, as t0:t1:count");
  opt_sweep->excludes(opt_t);
  compute->callback([&] {
    compute_mp.resolve();
    Sweep sw;
    if (!sweep_text.empty()) sw = parse_sweep(sweep_text);
    run_compute(compute_mp, compute_n, compute_t, !sweep_text.empty(), sw);
  });

  // stationary
  auto* stationary = app.add_subcommand(
      "stationary", "stationary trace moment of the eigenvalue law");
  ModelParams stat_mp;
  stat_mp.add_to(stationary);
  int stat_n = 1;
  stationary->add_option("--n", stat_n, "trace power n")->required();
  stationary->callback([&] {
    stat_mp.resolve();
    run_stationary(stat_mp, stat_n);
  });

  // simulate / compare share the SimConfig flags.
  matjac::SimConfig sim_cfg;
  sim_cfg.steps = 200;
  sim_cfg.paths = 10000;
  sim_cfg.seed = 12345;
  int sim_n = 1;
  bool sim_sde = false;
  std::string sim_config_path;
  auto add_sim_options = [&](CLI::App* cmd) {
    cmd->add_option("--config", sim_config_path,
                    "JSON file with d, p, m, t, steps, paths, seed");
    cmd->add_option("--d", sim_cfg.d, "unitary group dimension d");
    cmd->add_option("--p", sim_cfg.p, "corner width p");
    cmd->add_option("--m", sim_cfg.m, "corner height m");
    cmd->add_option("--n", sim_n, "trace power n");
    cmd->add_option("--t", sim_cfg.t, "time t");
    cmd->add_option("--steps", sim_cfg.steps, "time steps per path");
    cmd->add_option("--paths", sim_cfg.paths, "number of sample paths");
    cmd->add_option("--seed", sim_cfg.seed, "base random seed");
  };

  // The JSON file fills in whatever flags the command line leaves out.
  auto merge_config = [&](CLI::App* cmd) {
    if (sim_config_path.empty()) return;
    matjac::SimConfig merged = sim_cfg;
    load_config(sim_config_path, &merged);
    if (cmd->count("--d")) merged.d = sim_cfg.d;
    if (cmd->count("--p")) merged.p = sim_cfg.p;
    if (cmd->count("--m")) merged.m = sim_cfg.m;
    if (cmd->count("--t")) merged.t = sim_cfg.t;
    if (cmd->count("--steps")) merged.steps = sim_cfg.steps;
    if (cmd->count("--paths")) merged.paths = sim_cfg.paths;
    if (cmd->count("--seed")) merged.seed = sim_cfg.seed;
    sim_cfg = merged;
  };

  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo estimate of E[tr(J_t^n)]");
  add_sim_options(simulate);
  simulate->add_flag("--sde", sim_sde,
                     "integrate the eigenvalue dynamics instead of the "
                     "unitary increments");
  simulate->callback([&] {
    merge_config(simulate);
    run_simulate(sim_cfg, sim_n, sim_sde);
  });

  auto* compare = app.add_subcommand(
      "compare", "closed form against Monte Carlo, with a z-score");
  add_sim_options(compare);
  compare->callback([&] {
    merge_config(compare);
    run_compare(sim_cfg, sim_n);
  });

  // density
  auto* density = app.add_subcommand(
      "density", "eigenvalue density at a point of the ordered simplex");
  ModelParams dens_mp;
  dens_mp.add_to(density);
  std::string lambda_text;
  double dens_t = 1.0, dens_eps = 1e-10;
  density->add_option("--lambda", lambda_text,
                      "evaluation point, decreasing, e.g. 0.7,0.3")
      ->required();
  density->add_option("--t", dens_t, "time t")->required();
  density->add_option("--eps", dens_eps, "relative truncation tolerance");
  density->callback([&] {
    dens_mp.resolve();
    run_density(dens_mp, lambda_text, dens_t, dens_eps);
  });

  // asymptotics
  auto* asym = app.add_subcommand(
      "asymptotics",
      "large-m scaling report for the moment formula's factors");
  double theta = 0.5, eta = 1.0;
  std::string mlist_text = "50,100,200,400";
  std::string tau_text = "2,1", mu_text = "1", alpha_text = "2,1";
  asym->add_option("--theta", theta, "limit of p/d")->required();
  asym->add_option("--eta", eta, "limit of m/p")->required();
  asym->add_option("--mlist", mlist_text, "comma list of matrix sizes");
  asym->add_option("--tau", tau_text, "hook tau, comma parts");
  asym->add_option("--mu", mu_text, "partition mu inside tau, comma parts");
  asym->add_option("--alpha", alpha_text, "hook alpha containing tau");
  asym->callback([&] {
    run_asymptotics(theta, eta, mlist_text, tau_text, mu_text, alpha_text);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
