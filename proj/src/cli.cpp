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

#include "hexameral/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "hexameral/chain_io.hpp"
#include "hexameral/domain.hpp"
#include "hexameral/error.hpp"
#include "hexameral/optimize.hpp"

namespace hexameral::cli {

namespace {

std::string significant(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

void diagnose(std::ostream& err, std::string_view kind, std::string_view message) {
  Json line;
  line["error"] = std::string(kind);
  line["message"] = std::string(message);
  err << line.dump() << "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  file << text;
}

void emit(const CommandConfig& config, const std::string& text, std::ostream& out) {
  if (config.output_path) {
    write_text(*config.output_path, text);
  } else {
    out << text;
  }
}

const std::filesystem::path& input(const CommandConfig& config) {
  if (!config.input_path) throw Error(ErrorKind::InvalidArgument, "this subcommand needs an input chain file");
  return *config.input_path;
}

int octagon(const CommandConfig& config, std::ostream& out) {
  const HexameralDomain domain = smoothed_octagon();
  write_text(config.output_path.value_or("octagon.json"), dump_json(domain_to_json(domain)));
  out << significant(domain.density, 12) << "\n";
  return kExitOk;
}

int density_cmd(const CommandConfig& config, std::ostream& out) {
  const ChainParams chain = read_chain_file(input(config));
  const ClosureReport report = closure_report(normalize_links(chain));
  const HexameralDomain domain = make_domain(chain, config.closure_tolerance);
  out << "area " << significant(domain.area, 17) << "\n";
  out << "density " << significant(domain.density, 12) << "\n";
  out << "link_length " << link_length(domain.chain, config.closure_tolerance) << "\n";
  out << "frame_residual " << significant(report.frame_residual, 6) << "\n";
  out << "tangent_residual " << significant(report.tangent_residual, 6) << "\n";
  return kExitOk;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

int verify(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  const ChainParams chain = normalize_links(read_chain_file(input(config)));
  std::vector<Check> checks;
  ChainTrace trace;
  try {
    trace = assemble(chain);
    checks.push_back({"assembly", true, std::to_string(chain.links.size()) + " links"});
  } catch (const Error& e) {
    checks.push_back({"assembly", false, e.what()});
  }
  if (checks.back().pass) {
    const ClosureReport report = closure_report(trace);
    checks.push_back({"closure", report.closed(config.closure_tolerance),
                      "frame " + significant(report.frame_residual, 3) + " tangent " +
                          significant(report.tangent_residual, 3)});
    checks.push_back({"angle", report.angle_ok, "margin " + significant(report.angle_margin, 3)});

    bool star = true;
    for (const auto& s : sample_boundary_frames(trace, config.per_link)) {
      const TangentElement x = adjoint(s.frame.inverse(), s.velocity);
      star = star && star_check(x) && x.det() > 0.0;
    }
    checks.push_back({"star", star, "pulled-back velocity at every sample"});

    bool ranks = true;
    std::string labels;
    for (const auto& link : trace.links) {
      if (link.rep.degenerate()) continue;
      try {
        const int r = rank_classify(sample_link(link.rep, link.placement, std::max(config.per_link, 16))).value();
        ranks = ranks && r == 1;
        labels += std::to_string(r);
      } catch (const Error&) {
        ranks = false;
        labels += "?";
      }
    }
    checks.push_back({"rank", ranks, "per link " + labels});

    if (checks[1].pass && checks[2].pass) {
      try {
        const HexameralDomain domain = make_domain(chain, config.closure_tolerance);
        const BoundaryPolyline poly = boundary_polyline(domain, config.per_link);
        const bool convex = poly.turns_consistently();
        const double sym = poly.symmetry_error();
        checks.push_back({"convexity", convex && sym < 1e-9, "symmetry " + significant(sym, 3)});
        const int length = link_length(domain.chain, config.closure_tolerance);
        checks.push_back({"link_length", (length - 1) % 3 == 0, std::to_string(length)});
      } catch (const Error& e) {
        checks.push_back({"convexity", false, e.what()});
      }
    } else {
      checks.push_back({"convexity", false, "chain is not closed"});
      checks.push_back({"link_length", false, "chain is not closed"});
    }
  }

  bool all = true;
  for (const auto& c : checks) {
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %s  ", c.name.c_str(), c.pass ? "PASS" : "FAIL");
    out << line << c.detail << "\n";
    all = all && c.pass;
  }
  if (!all) {
    for (const auto& c : checks) {
      if (!c.pass) {
        diagnose(err, "VerifyFailed", c.name + ": " + c.detail);
        break;
      }
    }
    return kExitFailure;
  }
  return kExitOk;
}

int five_link(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  SearchSpec spec = five_link_default_spec();
  spec.seed = config.seed;
  if (config.restarts) spec.restarts = *config.restarts;
  if (config.max_evals) spec.max_evals = *config.max_evals;
  spec.record_trace = config.trace;
  try {
    spec.validate();
  } catch (const Error& e) {
    diagnose(err, "InfeasibleInput", e.what());
    return kExitInfeasible;
  }
  const SearchResult result = five_link_search(spec);
  Json doc = chain_to_json(decode_five_link(result.best_params));
  doc["spec"] = search_spec_to_json(spec);
  doc["result"] = search_result_to_json(result);
  write_text(config.output_path.value_or("five_link.json"), dump_json(doc));
  out << significant(result.best_density, 12) << (result.feasible ? "" : " (infeasible)") << "\n";
  if (!result.feasible) {
    diagnose(err, "InfeasibleInput", "no feasible five-link chain found");
    return kExitInfeasible;
  }
  return kExitOk;
}

int reduce_link(const CommandConfig& config, std::ostream& out) {
  const ChainParams segment = read_chain_file(input(config));
  SearchSpec spec = link_reduction_default_spec();
  spec.seed = config.seed;
  if (config.restarts) spec.restarts = *config.restarts;
  if (config.max_evals) spec.max_evals = *config.max_evals;
  const LinkReductionReport report = link_reduction_experiment(segment, spec);
  Json doc = chain_to_json(segment);
  doc["spec"] = search_spec_to_json(spec);
  doc["result"] = link_reduction_to_json(report);
  emit(config, dump_json(doc), out);
  return kExitOk;
}

int export_cmd(const CommandConfig& config, std::ostream& out) {
  const HexameralDomain domain = make_domain(read_chain_file(input(config)), config.closure_tolerance);
  emit(config, config.format == Format::Svg ? boundary_svg(domain, config.per_link) : dump_json(domain_to_json(domain)),
       out);
  return kExitOk;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::Octagon: return octagon(config, out);
      case Subcommand::Density: return density_cmd(config, out);
      case Subcommand::Verify: return verify(config, out, err);
      case Subcommand::FiveLink: return five_link(config, out, err);
      case Subcommand::ReduceLink: return reduce_link(config, out);
      case Subcommand::Export: return export_cmd(config, out);
    }
  } catch (const Error& e) {
    diagnose(err, to_string(e.kind()), e.what());
    return e.kind() == ErrorKind::InfeasibleInput && (config.subcommand == Subcommand::FiveLink ||
                                                       config.subcommand == Subcommand::ReduceLink)
               ? kExitInfeasible
               : kExitFailure;
  } catch (const std::exception& e) {
    diagnose(err, "InternalError", e.what());
  }
  return kExitFailure;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hexameral domains: chains, densities and optimization experiments"};
  app.require_subcommand(1);
  CommandConfig config;
  std::string input_path, output_path;
  std::string format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output_path, "Output file");
    sub->add_option("--tolerance", config.closure_tolerance, "Closure tolerance")->check(CLI::PositiveNumber);
  };
  auto* oct = app.add_subcommand("octagon", "Write the smoothed octagon chain and print its density");
  add_common(oct);
  auto* dens = app.add_subcommand("density", "Area, density and link length of a closed chain");
  dens->add_option("chain", input_path, "Chain file")->required();
  add_common(dens);
  auto* ver = app.add_subcommand("verify", "Run the invariant suite on a chain");
  ver->add_option("chain", input_path, "Chain file")->required();
  ver->add_option("--per-link", config.per_link, "Samples per link")->check(CLI::Range(2, 100000));
  add_common(ver);
  auto* five = app.add_subcommand("five-link", "Search five-link chains for low density");
  five->add_option("--seed", config.seed, "Random seed");
  five->add_option("--restarts", config.restarts, "Number of restarts");
  five->add_option("--max-evals", config.max_evals, "Evaluations per restart");
  five->add_flag("--trace", config.trace, "Record the incumbent trace");
  add_common(five);
  auto* red = app.add_subcommand("reduce-link", "Replace a six-link segment by five links");
  red->add_option("segment", input_path, "Six-link chain file")->required();
  red->add_option("--seed", config.seed, "Random seed");
  red->add_option("--restarts", config.restarts, "Random starts per pattern");
  red->add_option("--max-evals", config.max_evals, "Evaluations per start");
  add_common(red);
  auto* exp = app.add_subcommand("export", "Export a closed chain as JSON or SVG");
  exp->add_option("chain", input_path, "Chain file")->required();
  exp->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  exp->add_option("--per-link", config.per_link, "Samples per link")->check(CLI::Range(2, 100000));
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    diagnose(err, "UsageError", e.what());
    return kExitFailure;
  }

  if (oct->parsed()) config.subcommand = Subcommand::Octagon;
  if (dens->parsed()) config.subcommand = Subcommand::Density;
  if (ver->parsed()) config.subcommand = Subcommand::Verify;
  if (five->parsed()) config.subcommand = Subcommand::FiveLink;
  if (red->parsed()) config.subcommand = Subcommand::ReduceLink;
  if (exp->parsed()) config.subcommand = Subcommand::Export;
  if (!input_path.empty()) config.input_path = input_path;
  if (!output_path.empty()) config.output_path = output_path;
  config.format = format == "svg" ? Format::Svg : Format::Json;
  return run(config, out, err);
}

}  // namespace hexameral::cli
