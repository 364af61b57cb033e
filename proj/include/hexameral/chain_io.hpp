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

#include <filesystem>
#include <string>

#include "hexameral/chain.hpp"
#include "json.hpp"

namespace hexameral {

using Json = nlohmann::ordered_json;

// Chain parameter document:
//   {"initial": {"frame": [alpha, beta, gamma, delta], "tangent": [a, b, c]},
//    "links": [{"tau": ..., "j": ...}, ...]}
Json chain_to_json(const ChainParams& chain);

// Throws ParseError on malformed documents and InvalidFrame when
// |det(frame) - 1| > 1e-9. The tangent is normalized and oriented so that
// sigma_0 moves counterclockwise.
ChainParams chain_from_json(const Json& doc);

Json read_json_file(const std::filesystem::path& path);
// Two-space indentation, keys in insertion order, trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& doc);
std::string dump_json(const Json& doc);

ChainParams read_chain_file(const std::filesystem::path& path);

}  // namespace hexameral
