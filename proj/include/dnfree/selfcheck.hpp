// Copyright 2026 The dnfree Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include "dnfree/json_io.hpp"

namespace dnfree {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SelfcheckReport {
  int order = 0;
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
};

/// Runs every invariant of every module against its independent oracle.
/// Lattice checks use fixed sizes (Catalan counts to n = 10, Moebius to
/// n = 7); series and transform checks use min(order, per-check cap).
/// Deterministic for a given seed.
SelfcheckReport run_selfcheck(int order, std::uint64_t seed = 20261019);

Json to_json(const SelfcheckReport& report);

/// Runs every pipeline on the N-component inputs and on each component
/// separately, and compares the emitted JSON of the former with the zipped
/// results of the latter. Returns the names of mismatching pipelines.
/// x and y need invertible means.
std::vector<std::string> componentwise_mismatches(const Distribution& x, const Distribution& y, int order);

}  // namespace dnfree
