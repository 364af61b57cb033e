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

#include "hexameral/chain_io.hpp"

#include <fstream>
#include <sstream>

#include "hexameral/error.hpp"

namespace hexameral {

Json chain_to_json(const ChainParams& chain) {
  Json doc;
  const FrameMatrix& f = chain.initial.frame;
  const TangentElement& x = chain.initial.tangent.rep();
  doc["initial"]["frame"] = Json::array({f.alpha(), f.beta(), f.gamma(), f.delta()});
  doc["initial"]["tangent"] = Json::array({x.a, x.b, x.c});
  doc["links"] = Json::array();
  for (const auto& link : chain.links) {
    Json entry;
    entry["tau"] = link.tau;
    entry["j"] = link.j;
    doc["links"].push_back(entry);
  }
  return doc;
}

namespace {

std::vector<double> numbers(const Json& node, std::size_t count, const char* what) {
  if (!node.is_array() || node.size() != count) {
    throw Error(ErrorKind::ParseError, std::string(what) + " must be an array of " + std::to_string(count) + " numbers");
  }
  std::vector<double> out;
  for (const auto& v : node) {
    if (!v.is_number()) throw Error(ErrorKind::ParseError, std::string(what) + " must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const Json& field(const Json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) {
    throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  }
  return node.at(key);
}

}  // namespace

ChainParams chain_from_json(const Json& doc) {
  const Json& initial = field(doc, "initial");
  const auto f = numbers(field(initial, "frame"), 4, "initial.frame");
  const auto x = numbers(field(initial, "tangent"), 3, "initial.tangent");
  const Mat2 raw{f[0], f[1], f[2], f[3]};
  if (!(std::abs(raw.det() - 1.0) <= 1e-9)) {
    std::ostringstream os;
    os.precision(17);
    os << "initial.frame has determinant " << raw.det();
    throw Error(ErrorKind::InvalidFrame, os.str());
  }
  const FrameMatrix frame(raw);
  const TangentElement tangent{x[0], x[1], x[2]};
  ChainParams chain{LinkState{frame, ProjectiveTangent::oriented(tangent, frame * unit_root(0))}, {}};

  const Json& links = field(doc, "links");
  if (!links.is_array()) throw Error(ErrorKind::ParseError, "links must be an array");
  for (const auto& entry : links) {
    const Json& tau = field(entry, "tau");
    const Json& j = field(entry, "j");
    if (!tau.is_number() || !j.is_number_integer()) throw Error(ErrorKind::ParseError, "link needs numeric tau and integer j");
    const LinkParam link{tau.get<double>(), j.get<int>()};
    if (!is_hyperbolic_index(link.j)) throw Error(ErrorKind::ParseError, "link index j must be 0, 2 or 4");
    if (!(link.tau >= 0.0 && link.tau < 1.0)) throw Error(ErrorKind::ParseError, "link tau must lie in [0, 1)");
    chain.links.push_back(link);
  }
  return chain;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << dump_json(doc);
}

ChainParams read_chain_file(const std::filesystem::path& path) { return chain_from_json(read_json_file(path)); }

}  // namespace hexameral
