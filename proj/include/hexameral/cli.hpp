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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "hexameral/sl2.hpp"

namespace hexameral::cli {

enum class Subcommand { Octagon, Density, Verify, FiveLink, ReduceLink, Export };
enum class Format { Json, Svg };

struct CommandConfig {
  Subcommand subcommand = Subcommand::Octagon;
  std::optional<std::filesystem::path> input_path;
  std::optional<std::filesystem::path> output_path;
  Format format = Format::Json;
  double closure_tolerance = tol::kClosureClassify;
  std::uint64_t seed = 0;
  std::optional<int> restarts;
  std::optional<int> max_evals;
  int per_link = 64;
  bool trace = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInfeasible = 2;

// Parses and runs; usage errors go to `err` with exit status 1.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hexameral::cli
