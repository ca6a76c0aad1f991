// Copyright 2026 The gridk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace gridk {

enum class ErrorKind {
  VertexOutOfGrid,
  NotContractible,
  NoCycle,
  NoSuchCycle,
  BudgetInvalid,
  EdgeNotInCycle,
  NotSolid,
  NotHamiltonian,
  PathIsMonotone,
  ParityMismatch,
  BelowShortest,
  SameVertex,
  NoSuchPath,
  BoundExceeded,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

// Thrown by every operation in the library. `reason` is a short machine tag
// ("parity", "range", "dimensions", "same-vertex", ...) used by the CLI.
class GridError : public std::runtime_error {
 public:
  GridError(ErrorKind kind, std::string reason, const std::string& what)
      : std::runtime_error(what), kind_(kind), reason_(std::move(reason)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& reason() const { return reason_; }

  // Shortest / longest lengths attached to NoSuchPath errors, when known.
  std::optional<long long> shortest;
  std::optional<long long> longest;

 private:
  ErrorKind kind_;
  std::string reason_;
};

}  // namespace gridk
