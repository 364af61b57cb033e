/*
 * Copyright 2026 The Hexameral Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hexameral/chain.hpp"
#include "hexameral/chain_io.hpp"

namespace hexameral {

struct PenaltyWeights {
  double closure = 1e4;
  double angle = 1e4;
  double feasibility = 1.0;  // scale of the graded penalty for chains that fail to assemble
};

struct Bound {
  double lower = 0.0;
  double upper = 0.0;
};

inline constexpr double kTauCeiling = 1.0 - 1e-6;

struct SearchSpec {
  int variable_count = 7;
  std::vector<Bound> bounds;
  PenaltyWeights penalty_weights;
  int restarts = 8;
  int max_evals = 3000;  // per restart, for the penalized stage
  std::uint64_t seed = 0;
  double feasibility_tolerance = tol::kClosureVerify;
  std::optional<std::vector<double>> start;  // used by restart 0 when present
  bool record_trace = false;
  bool parallel = true;

  void validate() const;
};

using FiveLinkPattern = std::array<int, 5>;

// Hyperbolic indices of the five links. The octagon embeds with tau_3 = 0.
inline constexpr FiveLinkPattern kFiveLinkPattern{0, 2, 4, 2, 0};

SearchSpec five_link_default_spec();

struct SearchResult {
  std::vector<double> best_params;
  double best_density = 0.0;
  ClosureReport closure;
  bool feasible = false;
  int eval_count = 0;
  std::vector<std::pair<int, double>> trace;
};

struct ObjectiveValue {
  double density = 0.0;
  double penalty = 0.0;
};

// params = (a/c, b/c, tau_0 .. tau_4): the initial frame is the identity and
// the initial tangent is (a/c, b/c, 1) up to positive scale.
ChainParams decode_five_link(std::span<const double> params, const FiveLinkPattern& pattern = kFiveLinkPattern);

ObjectiveValue five_link_objective(std::span<const double> params, const PenaltyWeights& weights = {},
                                   double feasibility_tolerance = tol::kClosureVerify,
                                   const FiveLinkPattern& pattern = kFiveLinkPattern);

std::vector<double> octagon_five_link_params();

// Newton projection onto the closure set: minimum-norm steps on the seven
// mismatch components with variables held inside their bounds. Returns
// nullopt when it does not converge.
std::optional<std::vector<double>> project_five_link(std::span<const double> params, std::span<const Bound> bounds,
                                                     const FiveLinkPattern& pattern = kFiveLinkPattern);

// Closes an arbitrary chain by the same projection. The unknowns are the
// initial tangent up to scale (in the frame of the initial state) and every
// tau; the initial frame and the indices are kept.
std::optional<ChainParams> close_chain(const ChainParams& guess);

SearchResult five_link_search(const SearchSpec& spec, const FiveLinkPattern& pattern = kFiveLinkPattern);

struct LinkReductionReport {
  LinkState initial;
  LinkState terminal;
  double six_link_area = 0.0;
  bool found = false;
  std::vector<LinkParam> five_links;
  double five_link_area = 0.0;
  double endpoint_residual = 0.0;  // max |state mismatch| at the terminal state
  bool angle_ok = false;
  bool area_decreased = false;
  int patterns_tried = 0;
  int eval_count = 0;
};

// Spec used by link reduction: five tau variables.
SearchSpec link_reduction_default_spec();

LinkReductionReport link_reduction_experiment(const ChainParams& six_link, const SearchSpec& spec);

Json search_spec_to_json(const SearchSpec& spec);
Json search_result_to_json(const SearchResult& result);
Json link_reduction_to_json(const LinkReductionReport& report);

}  // namespace hexameral
