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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hexameral/chain_io.hpp"
#include "hexameral/cli.hpp"

namespace fs = std::filesystem;
using namespace hexameral;

namespace {

struct Outcome {
  int status = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hexameral");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("hexameral_cli_" + std::to_string(std::rand()) + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("octagon, density and verify") {
  Scratch tmp;
  const Outcome oct = run_cli({"octagon", "-o", tmp / "oct.json"});
  CHECK(oct.status == 0);
  CHECK(oct.out == "0.902414182997\n");

  const Outcome dens = run_cli({"density", tmp / "oct.json"});
  CHECK(dens.status == 0);
  CHECK(dens.out.find("link_length 4\n") != std::string::npos);
  CHECK(dens.out.find("density 0.902414182997\n") != std::string::npos);

  const Outcome ver = run_cli({"verify", tmp / "oct.json"});
  CHECK(ver.status == 0);
  CHECK(ver.out.find("FAIL") == std::string::npos);
  CHECK(ver.err.empty());

  Json doc = read_json_file(tmp / "oct.json");
  doc["links"][1]["tau"] = doc["links"][1]["tau"].get<double>() + 0.01;
  write_json_file(tmp / "bumped.json", doc);
  const Outcome bad = run_cli({"verify", tmp / "bumped.json"});
  CHECK(bad.status == 1);
  CHECK(bad.out.find("closure      FAIL") != std::string::npos);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
  const Json diag = Json::parse(bad.err);
  CHECK(diag.at("message").get<std::string>().find("closure") == 0);

  const Outcome dbad = run_cli({"density", tmp / "bumped.json"});
  CHECK(dbad.status == 1);
  CHECK(Json::parse(dbad.err).at("error") == "NotClosed");
}

TEST_CASE("export is deterministic") {
  Scratch tmp;
  REQUIRE(run_cli({"octagon", "-o", tmp / "oct.json"}).status == 0);
  REQUIRE(run_cli({"export", tmp / "oct.json", "--format", "svg", "-o", tmp / "a.svg"}).status == 0);
  REQUIRE(run_cli({"export", tmp / "oct.json", "--format", "svg", "-o", tmp / "b.svg"}).status == 0);
  CHECK(slurp(tmp / "a.svg") == slurp(tmp / "b.svg"));
  CHECK(slurp(tmp / "a.svg").find("<svg") != std::string::npos);

  const Outcome json = run_cli({"export", tmp / "oct.json"});
  CHECK(json.status == 0);
  CHECK(Json::parse(json.out).at("link_length") == 4);
  // Re-writing the octagon gives the same bytes.
  REQUIRE(run_cli({"octagon", "-o", tmp / "again.json"}).status == 0);
  CHECK(slurp(tmp / "oct.json") == slurp(tmp / "again.json"));
}

TEST_CASE("five-link output round-trips") {
  Scratch tmp;
  const Outcome r = run_cli({"five-link", "--seed", "3", "--restarts", "2", "--max-evals", "400", "-o", tmp / "five.json"});
  CHECK(r.status == 0);
  const Json doc = read_json_file(tmp / "five.json");
  CHECK(doc.contains("spec"));
  CHECK(doc.contains("result"));
  CHECK_FALSE(doc["result"].contains("trace"));
  CHECK(run_cli({"density", tmp / "five.json"}).status == 0);
  CHECK(run_cli({"verify", tmp / "five.json"}).status == 0);

  REQUIRE(run_cli({"five-link", "--seed", "3", "--restarts", "2", "--max-evals", "400", "-o", tmp / "again.json"}).status == 0);
  CHECK(slurp(tmp / "five.json") == slurp(tmp / "again.json"));

  CHECK(run_cli({"five-link", "--restarts", "0", "-o", tmp / "x.json"}).status == 2);
}

TEST_CASE("reduce-link rejects infeasible segments") {
  Scratch tmp;
  REQUIRE(run_cli({"octagon", "-o", tmp / "oct.json"}).status == 0);
  const Outcome r = run_cli({"reduce-link", tmp / "oct.json"});
  CHECK(r.status == 2);
  CHECK(Json::parse(r.err).at("error") == "InfeasibleInput");
}

TEST_CASE("usage and parse errors") {
  CHECK(run_cli({}).status == 1);
  CHECK(run_cli({"density"}).status == 1);
  CHECK(run_cli({"export", "x.json", "--format", "png"}).status == 1);
  const Outcome missing = run_cli({"density", "/nonexistent/chain.json"});
  CHECK(missing.status == 1);
  CHECK(Json::parse(missing.err).at("error") == "ParseError");
}

TEST_CASE("the installed binary") {
  Scratch tmp;
  const std::string cmd = std::string(HEXAMERAL_CLI_PATH) + " octagon -o " + (tmp / "oct.json") + " > " + (tmp / "out.txt");
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(tmp / "out.txt") == "0.902414182997\n");
  const std::string bad = std::string(HEXAMERAL_CLI_PATH) + " density " + (tmp / "none.json") + " 2> " + (tmp / "err.txt");
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 1);
}
