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

#ifndef MATJAC_SERIALIZE_HPP
#define MATJAC_SERIALIZE_HPP

#include <json.hpp>

#include "matjac/asymptotics.hpp"
#include "matjac/moments.hpp"
#include "matjac/partitions.hpp"
#include "matjac/simulate.hpp"

// JSON adapters for the public result types. ordered_json keeps key order
// stable, so equal inputs serialize to byte-identical output.

namespace matjac {

using Json = nlohmann::ordered_json;

inline void to_json(Json& j, const Partition& p) {
  j = Json::array();
  for (int i = 1; i <= p.length(); ++i) j.push_back(p.part(i));
}

inline void from_json(const Json& j, Partition& p) {
  p = Partition(j.get<std::vector<int>>());
}

inline void to_json(Json& j, const MomentTerm& term) {
  j = Json{{"k", term.k},
           {"tau", term.tau},
           {"mu", term.mu},
           {"contribution", term.contribution},
           {"coeff", term.coeff}};
}

inline void to_json(Json& j, const MomentResult& res) {
  j = Json{{"n", res.n},
           {"t", res.t},
           {"value", res.value},
           {"terms", res.terms}};
}

inline void to_json(Json& j, const PathEstimate& est) {
  j = Json{{"mean", est.mean},
           {"stderr", est.std_error},
           {"paths", est.paths}};
}

inline void to_json(Json& j, const DensityEvaluation& ev) {
  j = Json{{"value", ev.value},
           {"truncation_weight", ev.truncation_weight},
           {"tail_estimate", ev.tail_estimate}};
}

inline void to_json(Json& j, const ScalingRow& row) {
  j = Json{{"m", row.m},
           {"quantity", row.quantity},
           {"finite_value", row.finite_value},
           {"limit_value", row.limit_value},
           {"gap", row.gap}};
}

inline void from_json(const Json& j, SimConfig& cfg) {
  if (j.contains("d")) j.at("d").get_to(cfg.d);
  if (j.contains("p")) j.at("p").get_to(cfg.p);
  if (j.contains("m")) j.at("m").get_to(cfg.m);
  if (j.contains("t")) j.at("t").get_to(cfg.t);
  if (j.contains("steps")) j.at("steps").get_to(cfg.steps);
  if (j.contains("paths")) j.at("paths").get_to(cfg.paths);
  if (j.contains("seed")) j.at("seed").get_to(cfg.seed);
}

}  // namespace matjac

#endif  // MATJAC_SERIALIZE_HPP
