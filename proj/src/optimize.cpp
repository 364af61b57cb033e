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

#include "hexameral/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "hexameral/domain.hpp"
#include "hexameral/error.hpp"
#include "hexameral/nelder_mead.hpp"

namespace hexameral {

namespace {

constexpr double kLarge = 1e6;
constexpr int kPolishEvals = 600;
constexpr double kNewtonTolerance = 1e-13;
constexpr int kNewtonIterations = 40;

std::vector<double> lower_of(std::span<const Bound> bounds) {
  std::vector<double> out;
  for (const auto& b : bounds) out.push_back(b.lower);
  return out;
}

std::vector<double> upper_of(std::span<const Bound> bounds) {
  std::vector<double> out;
  for (const auto& b : bounds) out.push_back(b.upper);
  return out;
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t sub = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(sub)};
  return std::mt19937_64(seq);
}

std::vector<double> uniform_point(std::span<const Bound> bounds, std::mt19937_64& rng) {
  std::vector<double> x;
  for (const auto& b : bounds) x.push_back(std::uniform_real_distribution<double>(b.lower, b.upper)(rng));
  return x;
}

double dead_zone(double value, double tolerance) {
  const double excess = std::abs(value) - tolerance;
  return excess > 0.0 ? excess * excess : 0.0;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

using Residual = std::function<std::vector<double>(std::span<const double>)>;

std::optional<std::vector<double>> try_residual(const Residual& f, std::span<const double> x) {
  try {
    std::vector<double> r = f(x);
    for (double v : r) {
      if (!std::isfinite(v)) return std::nullopt;
    }
    return r;
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Damped Gauss-Newton with minimum-norm steps and a bound-aware active set.
std::optional<std::vector<double>> newton_project(const Residual& f, std::vector<double> x,
                                                  std::span<const Bound> bounds) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) x[i] = std::clamp(x[i], bounds[i].lower, bounds[i].upper);
  auto r = try_residual(f, x);
  if (!r) return std::nullopt;
  for (int iter = 0; iter < kNewtonIterations; ++iter) {
    const double norm = max_abs(*r);
    if (norm < kNewtonTolerance) return x;

    Eigen::MatrixXd jac(static_cast<Eigen::Index>(r->size()), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const double h = 1e-7 * std::max(1.0, std::abs(x[i]));
      std::vector<double> hi = x, lo = x;
      hi[i] = std::min(x[i] + h, bounds[i].upper);
      lo[i] = std::max(x[i] - h, bounds[i].lower);
      auto rh = try_residual(f, hi);
      auto rl = try_residual(f, lo);
      if (!rh) { hi = x; rh = r; }
      if (!rl) { lo = x; rl = r; }
      const double span = hi[i] - lo[i];
      for (std::size_t k = 0; k < r->size(); ++k) {
        jac(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = span > 0.0 ? ((*rh)[k] - (*rl)[k]) / span : 0.0;
      }
    }
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(r->size()));
    for (std::size_t k = 0; k < r->size(); ++k) rhs(static_cast<Eigen::Index>(k)) = -(*r)[k];

    std::vector<bool> frozen(n, false);
    std::vector<double> step(n, 0.0);
    for (std::size_t pass = 0; pass <= n; ++pass) {
      std::vector<Eigen::Index> cols;
      for (std::size_t i = 0; i < n; ++i) {
        if (!frozen[i]) cols.push_back(static_cast<Eigen::Index>(i));
      }
      std::fill(step.begin(), step.end(), 0.0);
      if (cols.empty()) break;
      Eigen::MatrixXd sub(jac.rows(), static_cast<Eigen::Index>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c) sub.col(static_cast<Eigen::Index>(c)) = jac.col(cols[c]);
      // The threshold must be set before compute(); Z depends on the rank.
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
      cod.setThreshold(1e-8);
      cod.compute(sub);
      const Eigen::VectorXd dx = cod.solve(rhs);
      for (std::size_t c = 0; c < cols.size(); ++c) step[static_cast<std::size_t>(cols[c])] = dx(static_cast<Eigen::Index>(c));
      bool changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (frozen[i]) continue;
        if (x[i] + step[i] < bounds[i].lower || x[i] + step[i] > bounds[i].upper) {
          frozen[i] = true;
          changed = true;
        }
      }
      if (!changed) break;
    }

    bool accepted = false;
    for (double damping = 1.0; damping > 1e-4; damping *= 0.5) {
      std::vector<double> trial(n);
      for (std::size_t i = 0; i < n; ++i) trial[i] = std::clamp(x[i] + damping * step[i], bounds[i].lower, bounds[i].upper);
      auto rt = try_residual(f, trial);
      if (rt && max_abs(*rt) < norm) {
        x = std::move(trial);
        r = std::move(rt);
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  if (max_abs(*r) < 1e-11) return x;
  return std::nullopt;
}

std::vector<double> five_link_mismatch(std::span<const double> params, const FiveLinkPattern& pattern) {
  const auto m = closure_mismatch(assemble(decode_five_link(params, pattern)));
  return {m.begin(), m.end()};
}

// One incumbent per search instance; counts every objective evaluation.
struct Incumbent {
  int evals = 0;
  bool feasible = false;
  double density = std::numeric_limits<double>::infinity();
  double score = std::numeric_limits<double>::infinity();  // density + penalty, for infeasible fallback
  std::vector<double> params;
  std::vector<std::pair<int, double>> trace;
  bool record = false;

  void offer(std::span<const double> x, const ObjectiveValue& v) {
    if (v.penalty == 0.0) {
      if (!feasible || v.density < density) {
        feasible = true;
        density = v.density;
        params.assign(x.begin(), x.end());
        if (record) trace.emplace_back(evals, density);
      }
    } else if (!feasible && v.density + v.penalty < score) {
      score = v.density + v.penalty;
      density = v.density;
      params.assign(x.begin(), x.end());
    }
  }
};

Incumbent run_restart(const SearchSpec& spec, const FiveLinkPattern& pattern, std::vector<double> start) {
  Incumbent inc;
  inc.record = spec.record_trace;
  const auto lower = lower_of(spec.bounds);
  const auto upper = upper_of(spec.bounds);

  auto penalized = [&](std::span<const double> x) {
    ++inc.evals;
    const ObjectiveValue v = five_link_objective(x, spec.penalty_weights, spec.feasibility_tolerance, pattern);
    inc.offer(x, v);
    return v.density + v.penalty;
  };
  NelderMeadOptions options;
  options.max_evals = spec.max_evals;
  options.initial_step.assign(start.size(), 0.05);
  const NelderMeadResult coarse = nelder_mead(penalized, start, lower, upper, options);

  // Restrict to the closure set and polish there.
  auto projected = [&](std::span<const double> x) -> double {
    ++inc.evals;
    const auto p = project_five_link(x, spec.bounds, pattern);
    if (!p) return kLarge;
    const ObjectiveValue v = five_link_objective(*p, spec.penalty_weights, spec.feasibility_tolerance, pattern);
    inc.offer(*p, v);
    return v.penalty == 0.0 ? v.density : kLarge + v.penalty;
  };
  std::vector<double> seed_point = coarse.x;
  if (const auto p = project_five_link(coarse.x, spec.bounds, pattern)) seed_point = *p;
  NelderMeadOptions polish;
  polish.max_evals = std::min(kPolishEvals, std::max(spec.max_evals, 1));
  polish.initial_step.assign(start.size(), 1e-3);
  polish.x_tolerance = 1e-10;
  nelder_mead(projected, seed_point, lower, upper, polish);
  return inc;
}

}  // namespace

void SearchSpec::validate() const {
  if (variable_count <= 0) throw Error(ErrorKind::InvalidArgument, "variable_count must be positive");
  if (bounds.size() != static_cast<std::size_t>(variable_count)) {
    throw Error(ErrorKind::InvalidArgument, "bounds must have one interval per variable");
  }
  for (const auto& b : bounds) {
    if (!(b.lower <= b.upper)) throw Error(ErrorKind::InvalidArgument, "empty bound interval");
  }
  if (!(penalty_weights.closure > 0.0 && penalty_weights.angle > 0.0 && penalty_weights.feasibility > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "penalty weights must be positive");
  }
  if (restarts < 1) throw Error(ErrorKind::InvalidArgument, "restarts must be at least 1");
  if (max_evals < 0) throw Error(ErrorKind::InvalidArgument, "max_evals must be nonnegative");
  if (start && start->size() != bounds.size()) throw Error(ErrorKind::InvalidArgument, "start has the wrong length");
}

SearchSpec five_link_default_spec() {
  SearchSpec spec;
  spec.variable_count = 7;
  // Star conditions on the initial tangent (c = 1): sqrt(3)|a| < 1 and 3b + 1 < 0.
  spec.bounds = {{-0.57, 0.57}, {-4.0, -0.34}};
  for (int i = 0; i < 5; ++i) spec.bounds.push_back({0.0, kTauCeiling});
  return spec;
}

SearchSpec link_reduction_default_spec() {
  SearchSpec spec;
  spec.variable_count = 5;
  spec.bounds.assign(5, Bound{0.0, kTauCeiling});
  spec.restarts = 2;
  spec.max_evals = 1500;
  return spec;
}

ChainParams decode_five_link(std::span<const double> params, const FiveLinkPattern& pattern) {
  if (params.size() != 7) throw Error(ErrorKind::InvalidArgument, "five-link parameters have length 7");
  const TangentElement x{params[0], params[1], 1.0};
  ChainParams chain{LinkState{FrameMatrix::identity(), ProjectiveTangent::oriented(x, unit_root(0))}, {}};
  for (int i = 0; i < 5; ++i) chain.links.push_back({params[2 + static_cast<std::size_t>(i)], pattern[static_cast<std::size_t>(i)]});
  return chain;
}

ObjectiveValue five_link_objective(std::span<const double> params, const PenaltyWeights& weights,
                                   double feasibility_tolerance, const FiveLinkPattern& pattern) {
  const ChainParams chain = decode_five_link(params, pattern);
  double active = 0.0;
  for (const auto& link : chain.links) active += link.tau;
  if (!(active > 0.0)) return {0.0, weights.feasibility * kLarge};
  try {
    const ChainTrace trace = assemble(chain);
    const ClosureReport report = closure_report(trace);
    const double density = 2.0 * chain_area(trace) / kHexagonArea;
    double penalty = weights.closure * (dead_zone(report.frame_residual, feasibility_tolerance) +
                                        dead_zone(std::sqrt(report.tangent_residual), std::sqrt(feasibility_tolerance)));
    if (!report.angle_ok) penalty += weights.angle * dead_zone(report.angle_margin, tol::kAngle);
    if (!std::isfinite(density) || !std::isfinite(penalty)) return {0.0, weights.feasibility * kLarge};
    return {density, penalty};
  } catch (const Error& e) {
    // Graded by how far the chain got before propagation failed.
    const double reached = static_cast<double>(e.link_index().value_or(0));
    return {0.0, weights.feasibility * (1e3 + 1e2 * (5.0 - reached))};
  }
}

std::vector<double> octagon_five_link_params() {
  const TangentElement x = octagon_chain().initial.circle_tangent();
  const double tau = octagon_square_rep().tau;
  return {x.a / x.c, x.b / x.c, tau, tau, tau, 0.0, tau};
}

std::optional<std::vector<double>> project_five_link(std::span<const double> params, std::span<const Bound> bounds,
                                                     const FiveLinkPattern& pattern) {
  const Residual f = [&](std::span<const double> x) { return five_link_mismatch(x, pattern); };
  return newton_project(f, {params.begin(), params.end()}, bounds);
}

std::optional<ChainParams> close_chain(const ChainParams& guess) {
  const FrameMatrix g = guess.initial.frame;
  const TangentElement x = guess.initial.circle_tangent();
  if (!(x.c > 0.0)) return std::nullopt;
  auto decode = [&](std::span<const double> v) {
    const TangentElement t{v[0], v[1], 1.0};
    ChainParams chain{LinkState{FrameMatrix::identity(), ProjectiveTangent::oriented(t, unit_root(0))}, {}};
    for (std::size_t i = 0; i < guess.links.size(); ++i) chain.links.push_back({v[2 + i], guess.links[i].j});
    return chain;
  };
  const Residual f = [&](std::span<const double> v) {
    const auto m = closure_mismatch(assemble(decode(v)));
    return std::vector<double>(m.begin(), m.end());
  };
  std::vector<Bound> bounds = five_link_default_spec().bounds;
  bounds.resize(2 + guess.links.size(), Bound{0.0, kTauCeiling});
  std::vector<double> start{x.a / x.c, x.b / x.c};
  for (const auto& link : guess.links) start.push_back(link.tau);
  const auto solved = newton_project(f, start, bounds);
  if (!solved) return std::nullopt;
  ChainParams out = decode(*solved);
  out.initial = out.initial.transformed(g);
  return out;
}

SearchResult five_link_search(const SearchSpec& spec, const FiveLinkPattern& pattern) {
  spec.validate();
  if (spec.variable_count != 7) throw Error(ErrorKind::InvalidArgument, "five-link search has seven variables");

  std::vector<std::vector<double>> starts;
  for (int r = 0; r < spec.restarts; ++r) {
    if (r == 0 && spec.start) {
      starts.push_back(*spec.start);
    } else {
      auto rng = seeded_engine(spec.seed, static_cast<std::uint64_t>(r));
      starts.push_back(uniform_point(spec.bounds, rng));
    }
  }

  SearchResult result;
  if (spec.max_evals == 0) {
    std::vector<double> x = starts.front();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], spec.bounds[i].lower, spec.bounds[i].upper);
    const ObjectiveValue v = five_link_objective(x, spec.penalty_weights, spec.feasibility_tolerance, pattern);
    result.best_params = x;
    result.best_density = v.density;
    result.feasible = v.penalty == 0.0;
    result.eval_count = 1;
    try {
      result.closure = closure_report(decode_five_link(x, pattern));
    } catch (const Error&) {
      result.closure.frame_residual = result.closure.tangent_residual = std::numeric_limits<double>::infinity();
    }
    if (spec.record_trace && result.feasible) result.trace.emplace_back(1, v.density);
    return result;
  }

  std::vector<Incumbent> outcomes;
  if (spec.parallel && starts.size() > 1) {
    std::vector<std::future<Incumbent>> jobs;
    for (const auto& s : starts) jobs.push_back(std::async(std::launch::async, run_restart, std::cref(spec), std::cref(pattern), s));
    for (auto& job : jobs) outcomes.push_back(job.get());
  } else {
    for (const auto& s : starts) outcomes.push_back(run_restart(spec, pattern, s));
  }

  // Deterministic merge in restart order; strict comparisons keep the earliest on ties.
  const Incumbent* best = nullptr;
  double running = std::numeric_limits<double>::infinity();
  int offset = 0;
  for (const auto& inc : outcomes) {
    for (const auto& [count, dens] : inc.trace) {
      if (dens < running) {
        running = dens;
        result.trace.emplace_back(offset + count, dens);
      }
    }
    offset += inc.evals;
    if (best == nullptr) {
      best = &inc;
    } else if (inc.feasible && (!best->feasible || inc.density < best->density)) {
      best = &inc;
    } else if (!inc.feasible && !best->feasible && inc.score < best->score) {
      best = &inc;
    }
  }
  result.eval_count = offset;
  result.best_params = best->params;
  result.best_density = best->density;
  result.feasible = best->feasible;
  try {
    result.closure = closure_report(decode_five_link(best->params, pattern));
  } catch (const Error&) {
    result.closure.frame_residual = result.closure.tangent_residual = std::numeric_limits<double>::infinity();
  }
  return result;
}

namespace {

struct ReductionCandidate {
  bool found = false;
  double area = std::numeric_limits<double>::infinity();
  std::vector<LinkParam> links;
  double residual = 0.0;
  bool angle_ok = false;
  int evals = 0;
};

std::vector<LinkParam> with_pattern(std::span<const double> tau, const FiveLinkPattern& pattern) {
  std::vector<LinkParam> links;
  for (std::size_t i = 0; i < 5; ++i) links.push_back({tau[i], pattern[i]});
  return links;
}

ReductionCandidate reduce_pattern(const LinkState& initial, const LinkState& terminal, const FiveLinkPattern& pattern,
                                  const std::vector<std::vector<double>>& starts, const SearchSpec& spec) {
  ReductionCandidate best;
  const auto lower = lower_of(spec.bounds);
  const auto upper = upper_of(spec.bounds);
  const Residual mismatch = [&](std::span<const double> tau) {
    const ChainTrace trace = assemble(ChainParams{initial, with_pattern(tau, pattern)});
    const auto m = state_mismatch(initial.frame, trace.terminal(), terminal);
    return std::vector<double>(m.begin(), m.end());
  };
  auto penalized = [&](std::span<const double> tau) {
    ++best.evals;
    try {
      const ChainTrace trace = assemble(ChainParams{initial, with_pattern(tau, pattern)});
      double penalty = 0.0;
      for (double m : state_mismatch(initial.frame, trace.terminal(), terminal)) {
        penalty += spec.penalty_weights.closure * dead_zone(m, spec.feasibility_tolerance);
      }
      const double margin = angle_margin(trace);
      if (margin < -tol::kAngle) penalty += spec.penalty_weights.angle * dead_zone(margin, tol::kAngle);
      return chain_area(trace) + penalty;
    } catch (const Error& e) {
      return spec.penalty_weights.feasibility * (1e3 + 1e2 * (5.0 - static_cast<double>(e.link_index().value_or(0))));
    }
  };
  auto consider = [&](const std::vector<double>& tau) {
    const auto p = newton_project(mismatch, tau, spec.bounds);
    if (!p) return;
    try {
      const ChainTrace trace = assemble(ChainParams{initial, with_pattern(*p, pattern)});
      const auto m = state_mismatch(initial.frame, trace.terminal(), terminal);
      const double residual = max_abs(m);
      const bool angle = angle_margin(trace) >= -tol::kAngle;
      if (residual >= spec.feasibility_tolerance || !angle) return;
      const double area = chain_area(trace);
      if (area < best.area) {
        best.found = true;
        best.area = area;
        best.links = with_pattern(*p, pattern);
        best.residual = residual;
        best.angle_ok = angle;
      }
    } catch (const Error&) {
    }
  };
  NelderMeadOptions options;
  options.max_evals = spec.max_evals;
  options.initial_step.assign(5, 0.05);
  for (const auto& s : starts) {
    consider(s);
    if (spec.max_evals > 0) consider(nelder_mead(penalized, s, lower, upper, options).x);
  }
  return best;
}

}  // namespace

LinkReductionReport link_reduction_experiment(const ChainParams& six_link, const SearchSpec& spec) {
  spec.validate();
  if (spec.variable_count != 5) throw Error(ErrorKind::InvalidArgument, "link reduction has five variables");
  if (six_link.links.size() != 6) throw Error(ErrorKind::InfeasibleInput, "link reduction needs a six-link segment");
  ChainTrace six;
  try {
    six = assemble(six_link);
  } catch (const Error& e) {
    throw Error(ErrorKind::InfeasibleInput, std::string("six-link segment does not assemble: ") + e.what());
  }
  if (angle_margin(six) < -tol::kAngle) {
    throw Error(ErrorKind::InfeasibleInput, "six-link segment violates the angle condition");
  }

  LinkReductionReport report{six.initial(), six.terminal(), chain_area(six), false, {}, 0.0, 0.0, false, false, 0, 0};

  std::vector<FiveLinkPattern> patterns;
  for (int code = 0; code < 243; ++code) {
    FiveLinkPattern p{};
    int c = code;
    bool ok = true;
    for (std::size_t i = 0; i < 5; ++i) {
      p[i] = 2 * (c % 3);
      c /= 3;
      if (i > 0 && p[i] == p[i - 1]) ok = false;
    }
    if (ok) patterns.push_back(p);
  }
  std::sort(patterns.begin(), patterns.end());

  auto starts_for = [&](std::size_t index) {
    std::vector<std::vector<double>> starts;
    // Warm starts: drop one link of the segment when the rest matches the pattern.
    for (std::size_t drop = 0; drop < 6; ++drop) {
      std::vector<double> tau;
      bool match = true;
      for (std::size_t i = 0, k = 0; i < 6; ++i) {
        if (i == drop) continue;
        if (six_link.links[i].j != patterns[index][k]) match = false;
        tau.push_back(std::clamp(six_link.links[i].tau, 0.0, kTauCeiling));
        ++k;
      }
      if (match && std::find(starts.begin(), starts.end(), tau) == starts.end()) starts.push_back(tau);
    }
    for (int r = 0; r < spec.restarts; ++r) {
      auto rng = seeded_engine(spec.seed, index, static_cast<std::uint64_t>(r));
      starts.push_back(uniform_point(spec.bounds, rng));
    }
    return starts;
  };

  std::vector<ReductionCandidate> outcomes(patterns.size());
  if (spec.parallel) {
    std::vector<std::future<ReductionCandidate>> jobs;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      jobs.push_back(std::async(std::launch::async, [&, i] {
        return reduce_pattern(report.initial, report.terminal, patterns[i], starts_for(i), spec);
      }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) outcomes[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      outcomes[i] = reduce_pattern(report.initial, report.terminal, patterns[i], starts_for(i), spec);
    }
  }

  report.patterns_tried = static_cast<int>(patterns.size());
  const ReductionCandidate* best = nullptr;
  for (const auto& c : outcomes) {
    report.eval_count += c.evals;
    if (c.found && (best == nullptr || c.area < best->area)) best = &c;
  }
  if (best != nullptr) {
    report.found = true;
    report.five_links = best->links;
    report.five_link_area = best->area;
    report.endpoint_residual = best->residual;
    report.angle_ok = best->angle_ok;
    report.area_decreased = best->area < report.six_link_area - 1e-9;
  }
  return report;
}

namespace {

Json closure_json(const ClosureReport& c) {
  Json out;
  out["frame_residual"] = c.frame_residual;
  out["tangent_residual"] = c.tangent_residual;
  out["angle_ok"] = c.angle_ok;
  out["angle_margin"] = c.angle_margin;
  return out;
}

Json state_json(const LinkState& s) {
  Json out;
  const FrameMatrix& f = s.frame;
  const TangentElement& x = s.tangent.rep();
  out["frame"] = Json::array({f.alpha(), f.beta(), f.gamma(), f.delta()});
  out["tangent"] = Json::array({x.a, x.b, x.c});
  return out;
}

}  // namespace

Json search_spec_to_json(const SearchSpec& spec) {
  Json out;
  out["variable_count"] = spec.variable_count;
  out["bounds"] = Json::array();
  for (const auto& b : spec.bounds) out["bounds"].push_back(Json::array({b.lower, b.upper}));
  out["penalty_weights"]["closure"] = spec.penalty_weights.closure;
  out["penalty_weights"]["angle"] = spec.penalty_weights.angle;
  out["penalty_weights"]["feasibility"] = spec.penalty_weights.feasibility;
  out["restarts"] = spec.restarts;
  out["max_evals"] = spec.max_evals;
  out["seed"] = spec.seed;
  out["feasibility_tolerance"] = spec.feasibility_tolerance;
  if (spec.start) out["start"] = *spec.start;
  return out;
}

Json search_result_to_json(const SearchResult& result) {
  Json out;
  out["best_params"] = result.best_params;
  out["best_density"] = result.best_density;
  out["feasible"] = result.feasible;
  out["eval_count"] = result.eval_count;
  out["closure"] = closure_json(result.closure);
  if (!result.trace.empty()) {
    out["trace"] = Json::array();
    for (const auto& [count, dens] : result.trace) out["trace"].push_back(Json::array({count, dens}));
  }
  return out;
}

Json link_reduction_to_json(const LinkReductionReport& report) {
  Json out;
  out["initial"] = state_json(report.initial);
  out["terminal"] = state_json(report.terminal);
  out["six_link_area"] = report.six_link_area;
  out["found"] = report.found;
  out["five_links"] = Json::array();
  for (const auto& l : report.five_links) out["five_links"].push_back(Json{{"tau", l.tau}, {"j", l.j}});
  out["five_link_area"] = report.five_link_area;
  out["endpoint_residual"] = report.endpoint_residual;
  out["angle_ok"] = report.angle_ok;
  out["area_decreased"] = report.area_decreased;
  out["patterns_tried"] = report.patterns_tried;
  out["eval_count"] = report.eval_count;
  return out;
}

}  // namespace hexameral
