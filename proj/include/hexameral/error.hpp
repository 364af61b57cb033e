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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hexameral {

enum class ErrorKind {
  InvalidFrame,
  DegenerateVelocity,
  WedgeMismatch,
  MissingAcceleration,
  RankUndefined,
  RankZero,
  ScaleTooSmall,
  ParameterOutOfRange,
  NotRankOneCompatible,
  NotClosed,
  LinkLengthViolation,
  StarViolation,
  SignCondition,
  InfeasibleInput,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the
// CLI diagnostics) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  Error(ErrorKind kind, const std::string& what, std::size_t link_index);

  ErrorKind kind() const noexcept { return kind_; }
  // Set when the failure happened while assembling a particular link.
  std::optional<std::size_t> link_index() const noexcept { return link_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> link_;
};

}  // namespace hexameral
